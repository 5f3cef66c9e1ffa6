function assert(x: unknown) {}
