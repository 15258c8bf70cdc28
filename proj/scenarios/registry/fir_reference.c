{
    int fi, si, ci;
    for (fi = 0; fi < FILTERS; fi++)
        for (si = 0; si < LEN; si++) {
            y[fi * LEN + si] = 0.0;
            for (ci = 0; ci < TAPS; ci++)
                y[fi * LEN + si] += h[fi * TAPS + ci] * x[fi * PAD + si + ci];
        }
    for (fi = 0; fi < FILTERS; fi++)
        y[fi * LEN] = y[fi * LEN] * 0.5;
}
