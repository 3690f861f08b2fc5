package noh;

public class ClassD {
    public void stepD() {
    }
}
