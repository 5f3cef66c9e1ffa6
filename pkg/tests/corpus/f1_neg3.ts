class C { accessor() {} }
