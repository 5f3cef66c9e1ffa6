let plain: "literal";
