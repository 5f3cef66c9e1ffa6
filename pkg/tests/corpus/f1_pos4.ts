declare class D { accessor y: string; }
