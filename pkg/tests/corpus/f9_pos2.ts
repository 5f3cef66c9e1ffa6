let u: `a` | `b${C}`;
