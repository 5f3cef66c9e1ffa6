abstract class D {}
