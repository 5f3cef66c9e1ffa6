const cfg = { port: 8080 } satisfies Record<string, number>;
