type Ctor = abstract new (x: number) => Base;
