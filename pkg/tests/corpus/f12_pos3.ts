a ??= b;
