class C { static { init(); } }
