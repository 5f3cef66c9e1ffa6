class C { static
{ init(); } }
