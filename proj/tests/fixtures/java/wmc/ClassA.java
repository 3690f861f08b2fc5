package wmc;

public class ClassA {
    public void m1() {
        int i = 0;
        while (i < 10) {
            System.out.println(i);
            i++;
        }
    }

    public void m2() {
        int i = 3;
        do {
            if (i % 3 == 0)
                System.out.println(i);
            i++;
        } while (i < 10);
    }
}
