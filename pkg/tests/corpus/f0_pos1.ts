const x = y satisfies Foo;
