count ??= 0;
