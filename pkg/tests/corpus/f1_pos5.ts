abstract class AC { abstract accessor prop: number; }
