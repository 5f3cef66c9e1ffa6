class C { override() {} }
