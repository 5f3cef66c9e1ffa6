if ("x" in obj) {}
