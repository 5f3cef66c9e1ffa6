// const x = y satisfies Foo;
let ok = 1;
