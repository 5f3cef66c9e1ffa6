const m = new Map<string, `k${string}`>();
