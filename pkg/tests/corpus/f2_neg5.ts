interface I { infer: string; extends: number; }
