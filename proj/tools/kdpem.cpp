#include <cstdio>
int main() { std::puts("kdpem: work in progress"); return 0; }
