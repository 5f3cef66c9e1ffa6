function gen<T extends `a${B}`>(x: T) {}
