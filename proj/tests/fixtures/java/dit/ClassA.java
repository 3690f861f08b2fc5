package dit;

public class ClassA {
    public int depthA() {
        return 0;
    }
}
