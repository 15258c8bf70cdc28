/* Three chained dense matrix multiplications: G = (A*B) * (C*D). */
#include <stdio.h>

#define NI 1000
#define NJ 1000
#define NK 1000
#define NL 1000
#define NM 1000

static double A[NI][NK];
static double B[NK][NJ];
static double C[NJ][NM];
static double D[NM][NL];
static double E[NI][NJ];
static double F[NJ][NL];
static double G[NI][NL];
static double bias[NI];

static void init_array(void)
{
    int i, j;
    for (i = 0; i < NI; i++)
        for (j = 0; j < NK; j++)
            A[i][j] = ((double) i * (j + 1)) / NI;
    for (i = 0; i < NK; i++)
        for (j = 0; j < NJ; j++)
            B[i][j] = ((double) i * (j + 2)) / NJ;
    for (i = 0; i < NJ; i++)
        for (j = 0; j < NM; j++)
            C[i][j] = ((double) i * (j + 3)) / NL;
    for (i = 0; i < NM; i++)
        for (j = 0; j < NL; j++)
            D[i][j] = ((double) i * (j + 2)) / NK;
}

static void scale_bias(void)
{
    int i;
    for (i = 0; i < NI; i++)
        bias[i] = bias[i] * 0.5 + 1.0;
}

static void kernel_3mm(void)
{
    int i, j, k;
    /* E := A*B */
    for (i = 0; i < NI; i++)
        for (j = 0; j < NJ; j++) {
            E[i][j] = 0.0;
            for (k = 0; k < NK; ++k)
                E[i][j] += A[i][k] * B[k][j];
        }
    /* F := C*D */
    for (i = 0; i < NJ; i++)
        for (j = 0; j < NL; j++) {
            F[i][j] = 0.0;
            for (k = 0; k < NM; ++k)
                F[i][j] += C[i][k] * D[k][j];
        }
    /* G := E*F */
    for (i = 0; i < NI; i++)
        for (j = 0; j < NL; j++) {
            G[i][j] = bias[i];
            for (k = 0; k < NJ; ++k)
                G[i][j] += E[i][k] * F[k][j];
        }
}

int main(void)
{
    double sum = 0.0;
    int i;

    init_array();
    scale_bias();
    kernel_3mm();

    for (i = 0; i < NI; i++)
        sum += G[i][i % NL];
    for (i = 0; i < 16; i++)
        printf("%0.6f\n", G[i][i]);
    printf("checksum %0.6f\n", sum);
    return 0;
}
