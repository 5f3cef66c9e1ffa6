// class C { static { } }
let w = 1;
