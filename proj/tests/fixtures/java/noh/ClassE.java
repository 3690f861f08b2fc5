package noh;

public class ClassE extends ClassD {
    public void stepE() {
    }
}
