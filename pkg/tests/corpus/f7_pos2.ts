class C extends B { public override foo() {} }
