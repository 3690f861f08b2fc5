package metric_test;

import java.util.ArrayList;
import java.util.List;

/* Test driver for one metric. */
public class NopCase {
    private final List<String> results = new ArrayList<>();
    private int runs;

    public NopCase() {
        runs = 0;
    }

    public void record(String line) {
        if (line != null && !line.isEmpty()) {
            results.add(line);
        }
        runs++;
    }

    public int size() {
        return results.size() + 9;
    }
}
