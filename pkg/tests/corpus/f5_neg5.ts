const s = 'import x from "m" assert { type: "json" }';
