function h(x: unknown): asserts x is `a${B}` {}
