// Placeholder main; full CLI lands with the command implementations.
#include "hyperbessel/hyperbessel.hpp"

int main() { return 0; }
