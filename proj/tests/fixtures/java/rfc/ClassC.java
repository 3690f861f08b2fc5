package rfc;

public class ClassC extends ClassD {
    private ClassB b;

    public void run() {
        super.s();
        b.b1();
        b.b2();
        b.b3();
        level++;
    }
}
