class C extends B { constructor(override readonly x: number) { super(); } }
