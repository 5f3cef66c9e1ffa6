const C = class { static { boot(); } };
