import x from "m";
assert({ type: "json" });
