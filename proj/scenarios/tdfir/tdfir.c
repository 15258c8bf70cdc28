/* Time-domain FIR filter bank, HPEC-style dimensions (64 filters, 4096 samples). */
#include <stdio.h>

#define NFILT 64
#define NLEN 4096
#define NCOEF 12
#define NPAD (NLEN + NCOEF)

static double series[1024] = {0.25, -0.5, 0.75, -1.0};
static double coef[NFILT * NCOEF];
static double input[NFILT * NPAD];
static double output[NFILT * NLEN];

static void tdFir(void)
{
    int f, s, c;
    for (f = 0; f < NFILT; f++)
        for (s = 0; s < NLEN; s++) {
            output[f * NLEN + s] = 0.0;
            for (c = 0; c < NCOEF; c++)
                output[f * NLEN + s] += coef[f * NCOEF + c] * input[f * NPAD + s + c];
        }
    for (f = 0; f < NFILT; f++)
        output[f * NLEN] = output[f * NLEN] * 0.5;
}

int main(void)
{
    int i;
    for (i = 0; i < NFILT * NPAD; i++)
        input[i] = series[i & 1023];
    for (i = 0; i < NFILT * NCOEF; i++)
        coef[i] = series[(i * 7) & 1023];
    tdFir();
    printf("%0.9f %0.9f\n", output[0], output[NFILT * NLEN - 1]);
    return 0;
}
