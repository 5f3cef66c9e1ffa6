const assert = { type: "json" }; use(assert);
