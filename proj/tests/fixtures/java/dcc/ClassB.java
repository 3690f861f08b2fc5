package dcc;

public class ClassB {
    public int size() {
        return 1;
    }
}
