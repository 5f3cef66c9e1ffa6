import "m" assert { type: "css" };
