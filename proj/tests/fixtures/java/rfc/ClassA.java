package rfc;

public class ClassA {
    public void first() {
    }

    public void second() {
        first();
    }
}
