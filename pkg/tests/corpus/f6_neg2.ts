class C { static() {} }
