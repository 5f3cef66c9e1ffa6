class C extends B { override set s(v: number) {} }
