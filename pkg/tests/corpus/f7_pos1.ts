class C extends B { override m() {} }
