let t5: [string?];
