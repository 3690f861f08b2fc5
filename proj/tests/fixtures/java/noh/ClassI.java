package noh;

public class ClassI extends ClassH {
    public void stepI() {
    }
}
