package dcc;

public class ClassA {
    private ClassC store;
    private int total;

    public void accept(ClassB item) {
        total += item.size();
        store.keep(total);
    }
}
