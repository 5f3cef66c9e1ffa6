const s = "y satisfies Foo";
