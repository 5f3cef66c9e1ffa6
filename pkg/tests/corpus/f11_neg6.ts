let obj11 = { name: "x" };
