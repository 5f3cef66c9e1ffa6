abstract class E { abstract m(): void; }
