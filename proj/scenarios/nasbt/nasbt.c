/* Block tridiagonal solver style workload: forward/backward sweeps over a
   64^3 grid plus face smoothing, interpolation and diagnostics passes. */
#include <stdio.h>

#define GRID 64
#define CUBE (GRID * GRID * GRID)

static double u[CUBE];
static double v[CUBE];
static double w[CUBE];
static double q[CUBE];
static double r[CUBE];
static double lhs[CUBE];
static double face[GRID * GRID];

static void x_solve(void)
{
    int i, j, k;
    for (i = 1; i < GRID - 1; i++)
        for (j = 1; j < GRID - 1; j++)
            for (k = 1; k < GRID - 1; k++)
                u[(i * GRID + j) * GRID + k] =
                    u[(i * GRID + j) * GRID + k] * 0.9
                    + v[((i - 1) * GRID + j) * GRID + k] * 0.05
                    + w[((i + 1) * GRID + j) * GRID + k] * 0.05
                    - lhs[(i * GRID + j) * GRID + k] / 64.0;
}

static void y_solve(void)
{
    int i, j, k;
    for (i = 1; i < GRID - 1; i++)
        for (j = 1; j < GRID - 1; j++)
            for (k = 1; k < GRID - 1; k++)
                v[(i * GRID + j) * GRID + k] =
                    v[(i * GRID + j) * GRID + k] * 0.9
                    + w[((i - 1) * GRID + j) * GRID + k] * 0.05
                    + q[((i + 1) * GRID + j) * GRID + k] * 0.05
                    - lhs[(i * GRID + j) * GRID + k] / 64.0;
}

static void z_solve(void)
{
    int i, j, k;
    for (i = 1; i < GRID - 1; i++)
        for (j = 1; j < GRID - 1; j++)
            for (k = 1; k < GRID - 1; k++)
                w[(i * GRID + j) * GRID + k] =
                    w[(i * GRID + j) * GRID + k] * 0.9
                    + q[((i - 1) * GRID + j) * GRID + k] * 0.05
                    + u[((i + 1) * GRID + j) * GRID + k] * 0.05
                    - lhs[(i * GRID + j) * GRID + k] / 64.0;
}

static void rhs_update(void)
{
    int i, j, k;
    for (i = 1; i < GRID - 1; i++)
        for (j = 1; j < GRID - 1; j++)
            for (k = 1; k < GRID - 1; k++)
                q[(i * GRID + j) * GRID + k] =
                    q[(i * GRID + j) * GRID + k] * 0.9
                    + u[((i - 1) * GRID + j) * GRID + k] * 0.05
                    + v[((i + 1) * GRID + j) * GRID + k] * 0.05
                    - lhs[(i * GRID + j) * GRID + k] / 64.0;
}

static void flux_sweep(void)
{
    int i, j, k;
    for (i = 1; i < GRID - 1; i++)
        for (j = 1; j < GRID - 1; j++)
            for (k = 1; k < GRID - 1; k++)
                u[(i * GRID + j) * GRID + k] =
                    u[(i * GRID + j) * GRID + k] * 0.9
                    + v[((i - 1) * GRID + j) * GRID + k] * 0.05
                    + w[((i + 1) * GRID + j) * GRID + k] * 0.05
                    - lhs[(i * GRID + j) * GRID + k] / 64.0;
}

static void elem_pass_00(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.90 + w[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.91 + q[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.92 + r[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.93 + lhs[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.94 + u[i] * 0.06;
}

static void elem_pass_01(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.95 + q[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.96 + r[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.97 + lhs[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.98 + u[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.99 + v[i] * 0.01;
}

static void elem_pass_02(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.90 + r[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.91 + lhs[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.92 + u[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.93 + v[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.94 + w[i] * 0.06;
}

static void elem_pass_03(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.95 + lhs[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.96 + u[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.97 + v[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.98 + w[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.99 + q[i] * 0.01;
}

static void elem_pass_04(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.90 + u[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.91 + v[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.92 + w[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.93 + q[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.94 + r[i] * 0.06;
}

static void elem_pass_05(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.95 + v[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.96 + w[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.97 + q[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.98 + r[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.99 + lhs[i] * 0.01;
}

static void elem_pass_06(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.90 + w[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.91 + q[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.92 + r[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.93 + lhs[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.94 + u[i] * 0.06;
}

static void elem_pass_07(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.95 + q[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.96 + r[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.97 + lhs[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.98 + u[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.99 + v[i] * 0.01;
}

static void elem_pass_08(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.90 + r[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.91 + lhs[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.92 + u[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.93 + v[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.94 + w[i] * 0.06;
}

static void elem_pass_09(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.95 + lhs[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.96 + u[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.97 + v[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.98 + w[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.99 + q[i] * 0.01;
}

static void elem_pass_10(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.90 + u[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.91 + v[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.92 + w[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.93 + q[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.94 + r[i] * 0.06;
}

static void elem_pass_11(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.95 + v[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.96 + w[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.97 + q[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.98 + r[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.99 + lhs[i] * 0.01;
}

static void elem_pass_12(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.90 + w[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.91 + q[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.92 + r[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.93 + lhs[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.94 + u[i] * 0.06;
}

static void elem_pass_13(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.95 + q[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.96 + r[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.97 + lhs[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.98 + u[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.99 + v[i] * 0.01;
}

static void elem_pass_14(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.90 + r[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.91 + lhs[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.92 + u[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.93 + v[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.94 + w[i] * 0.06;
}

static void elem_pass_15(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.95 + lhs[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.96 + u[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.97 + v[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.98 + w[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.99 + q[i] * 0.01;
}

static void elem_pass_16(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.90 + u[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.91 + v[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.92 + w[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.93 + q[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.94 + r[i] * 0.06;
}

static void elem_pass_17(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.95 + v[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.96 + w[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.97 + q[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.98 + r[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.99 + lhs[i] * 0.01;
}

static void elem_pass_18(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.90 + w[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.91 + q[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.92 + r[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.93 + lhs[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.94 + u[i] * 0.06;
}

static void elem_pass_19(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        v[i] = w[i] * 0.95 + q[i] * 0.05;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.96 + r[i] * 0.04;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.97 + lhs[i] * 0.03;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.98 + u[i] * 0.02;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.99 + v[i] * 0.01;
}

static void elem_pass_20(void)
{
    int i;
    for (i = 0; i < CUBE; i++)
        w[i] = q[i] * 0.90 + r[i] * 0.10;
    for (i = 0; i < CUBE; i++)
        q[i] = r[i] * 0.91 + lhs[i] * 0.09;
    for (i = 0; i < CUBE; i++)
        r[i] = lhs[i] * 0.92 + u[i] * 0.08;
    for (i = 0; i < CUBE; i++)
        lhs[i] = u[i] * 0.93 + v[i] * 0.07;
    for (i = 0; i < CUBE; i++)
        u[i] = v[i] * 0.94 + w[i] * 0.06;
}

static double diag_pass_00(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++)
        acc = acc + u[i] * u[i];
    for (i = 0; i < 4; i++)
        printf("v[%d] = %0.6f\n", i, v[i]);
    for (i = 0; i < CUBE; i++) {
        if (w[i] > 1.0e30)
            break;
        w[i] = w[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (q[i] < -1.0e30)
            goto bail_00_3;
        q[i] = q[i];
    }
bail_00_3:;
    return acc;
}

static double diag_pass_01(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (v[i] > 1.0e30)
            return v[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + w[i] * w[i];
    for (i = 0; i < 4; i++)
        printf("q[%d] = %0.6f\n", i, q[i]);
    for (i = 0; i < CUBE; i++) {
        if (r[i] > 1.0e30)
            break;
        r[i] = r[i];
    }
    return acc;
}

static double diag_pass_02(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (w[i] < -1.0e30)
            goto bail_02_0;
        w[i] = w[i];
    }
bail_02_0:;
    for (i = 0; i < CUBE; i++) {
        if (q[i] > 1.0e30)
            return q[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + r[i] * r[i];
    for (i = 0; i < 4; i++)
        printf("lhs[%d] = %0.6f\n", i, lhs[i]);
    return acc;
}

static double diag_pass_03(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (q[i] > 1.0e30)
            break;
        q[i] = q[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (r[i] < -1.0e30)
            goto bail_03_1;
        r[i] = r[i];
    }
bail_03_1:;
    for (i = 0; i < CUBE; i++) {
        if (lhs[i] > 1.0e30)
            return lhs[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + u[i] * u[i];
    return acc;
}

static double diag_pass_04(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < 4; i++)
        printf("r[%d] = %0.6f\n", i, r[i]);
    for (i = 0; i < CUBE; i++) {
        if (lhs[i] > 1.0e30)
            break;
        lhs[i] = lhs[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (u[i] < -1.0e30)
            goto bail_04_2;
        u[i] = u[i];
    }
bail_04_2:;
    for (i = 0; i < CUBE; i++) {
        if (v[i] > 1.0e30)
            return v[i];
    }
    return acc;
}

static double diag_pass_05(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++)
        acc = acc + lhs[i] * lhs[i];
    for (i = 0; i < 4; i++)
        printf("u[%d] = %0.6f\n", i, u[i]);
    for (i = 0; i < CUBE; i++) {
        if (v[i] > 1.0e30)
            break;
        v[i] = v[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (w[i] < -1.0e30)
            goto bail_05_3;
        w[i] = w[i];
    }
bail_05_3:;
    return acc;
}

static double diag_pass_06(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (u[i] > 1.0e30)
            return u[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + v[i] * v[i];
    for (i = 0; i < 4; i++)
        printf("w[%d] = %0.6f\n", i, w[i]);
    for (i = 0; i < CUBE; i++) {
        if (q[i] > 1.0e30)
            break;
        q[i] = q[i];
    }
    return acc;
}

static double diag_pass_07(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (v[i] < -1.0e30)
            goto bail_07_0;
        v[i] = v[i];
    }
bail_07_0:;
    for (i = 0; i < CUBE; i++) {
        if (w[i] > 1.0e30)
            return w[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + q[i] * q[i];
    for (i = 0; i < 4; i++)
        printf("r[%d] = %0.6f\n", i, r[i]);
    return acc;
}

static double diag_pass_08(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (w[i] > 1.0e30)
            break;
        w[i] = w[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (q[i] < -1.0e30)
            goto bail_08_1;
        q[i] = q[i];
    }
bail_08_1:;
    for (i = 0; i < CUBE; i++) {
        if (r[i] > 1.0e30)
            return r[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + lhs[i] * lhs[i];
    return acc;
}

static double diag_pass_09(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < 4; i++)
        printf("q[%d] = %0.6f\n", i, q[i]);
    for (i = 0; i < CUBE; i++) {
        if (r[i] > 1.0e30)
            break;
        r[i] = r[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (lhs[i] < -1.0e30)
            goto bail_09_2;
        lhs[i] = lhs[i];
    }
bail_09_2:;
    for (i = 0; i < CUBE; i++) {
        if (u[i] > 1.0e30)
            return u[i];
    }
    return acc;
}

static double diag_pass_10(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++)
        acc = acc + r[i] * r[i];
    for (i = 0; i < 4; i++)
        printf("lhs[%d] = %0.6f\n", i, lhs[i]);
    for (i = 0; i < CUBE; i++) {
        if (u[i] > 1.0e30)
            break;
        u[i] = u[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (v[i] < -1.0e30)
            goto bail_10_3;
        v[i] = v[i];
    }
bail_10_3:;
    return acc;
}

static double diag_pass_11(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (lhs[i] > 1.0e30)
            return lhs[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + u[i] * u[i];
    for (i = 0; i < 4; i++)
        printf("v[%d] = %0.6f\n", i, v[i]);
    for (i = 0; i < CUBE; i++) {
        if (w[i] > 1.0e30)
            break;
        w[i] = w[i];
    }
    return acc;
}

static double diag_pass_12(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (u[i] < -1.0e30)
            goto bail_12_0;
        u[i] = u[i];
    }
bail_12_0:;
    for (i = 0; i < CUBE; i++) {
        if (v[i] > 1.0e30)
            return v[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + w[i] * w[i];
    for (i = 0; i < 4; i++)
        printf("q[%d] = %0.6f\n", i, q[i]);
    return acc;
}

static double diag_pass_13(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < CUBE; i++) {
        if (v[i] > 1.0e30)
            break;
        v[i] = v[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (w[i] < -1.0e30)
            goto bail_13_1;
        w[i] = w[i];
    }
bail_13_1:;
    for (i = 0; i < CUBE; i++) {
        if (q[i] > 1.0e30)
            return q[i];
    }
    for (i = 0; i < CUBE; i++)
        acc = acc + r[i] * r[i];
    return acc;
}

static double diag_pass_14(void)
{
    double acc = 0.0;
    int i;
    for (i = 0; i < 4; i++)
        printf("w[%d] = %0.6f\n", i, w[i]);
    for (i = 0; i < CUBE; i++) {
        if (q[i] > 1.0e30)
            break;
        q[i] = q[i];
    }
    for (i = 0; i < CUBE; i++) {
        if (r[i] < -1.0e30)
            goto bail_14_2;
        r[i] = r[i];
    }
bail_14_2:;
    return acc;
}

int main(void)
{
    int step;
    double norm = 0.0;
    /* no for loops in main: the time loop is a while to keep ids stable */
    step = 0;
    while (step < 2) {
        x_solve();
        y_solve();
        z_solve();
        rhs_update();
        flux_sweep();
        elem_pass_00();
        elem_pass_01();
        elem_pass_02();
        elem_pass_03();
        elem_pass_04();
        elem_pass_05();
        elem_pass_06();
        elem_pass_07();
        elem_pass_08();
        elem_pass_09();
        elem_pass_10();
        elem_pass_11();
        elem_pass_12();
        elem_pass_13();
        elem_pass_14();
        elem_pass_15();
        elem_pass_16();
        elem_pass_17();
        elem_pass_18();
        elem_pass_19();
        elem_pass_20();
        step = step + 1;
    }
    norm = norm + diag_pass_00();
    norm = norm + diag_pass_01();
    norm = norm + diag_pass_02();
    norm = norm + diag_pass_03();
    norm = norm + diag_pass_04();
    norm = norm + diag_pass_05();
    norm = norm + diag_pass_06();
    norm = norm + diag_pass_07();
    norm = norm + diag_pass_08();
    norm = norm + diag_pass_09();
    norm = norm + diag_pass_10();
    norm = norm + diag_pass_11();
    norm = norm + diag_pass_12();
    norm = norm + diag_pass_13();
    norm = norm + diag_pass_14();
    printf("norm %0.6f\n", norm);
    return 0;
}
