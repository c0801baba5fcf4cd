#include <iostream>

int main() {
    std::cout << "mtv: placeholder\n";
    return 0;
}
