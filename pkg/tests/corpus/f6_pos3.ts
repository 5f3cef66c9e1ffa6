class C { static {} static {} }
