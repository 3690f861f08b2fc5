package noh;

public class ClassK {
    public void stepK() {
    }
}
