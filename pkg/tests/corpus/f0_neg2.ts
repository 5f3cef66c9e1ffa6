const x = foo
satisfies(Bar);
