fn(arg satisfies Input);
