class C { static accessor count = 0; }
