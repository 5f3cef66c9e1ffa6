import("m", { assert: { type: "json" } });
