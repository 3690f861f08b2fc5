package dcc;

public class ClassC {
    private int kept;

    public void keep(int value) {
        kept = value;
    }
}
