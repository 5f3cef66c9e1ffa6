const o = { accessor: 2 };
