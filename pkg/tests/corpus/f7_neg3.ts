class C { override
m() {} }
