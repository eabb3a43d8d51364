#include <cstdio>

int main() {
  std::puts("hsgan: work in progress");
  return 0;
}
