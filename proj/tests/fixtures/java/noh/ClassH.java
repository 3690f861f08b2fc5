package noh;

public class ClassH {
    public void stepH() {
    }
}
