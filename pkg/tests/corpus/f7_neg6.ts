class C { overrideMethod() {} }
