class C { accessor: string; }
