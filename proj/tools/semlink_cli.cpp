#include <cstdio>
int main() { std::printf("semlink cli placeholder\n"); return 0; }
