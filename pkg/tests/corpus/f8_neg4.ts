const inst = new Foo();
