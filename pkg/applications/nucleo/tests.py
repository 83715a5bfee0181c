import math

from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from .excepciones import CoincidentCircles, DegenerateInput, ParallelLines
from .precision import CONFIRM, FAST, Tolerancia, precision_of
from .predicados import (
    collinear, concurrent, is_parallel, is_perpendicular, on, residuo_collinear, tangent,
)
from .primitivas import (
    Circulo, Punto, Recta, angle, circle_through, dist, foot, intersect_cc, intersect_lc,
    intersect_ll, line_through, midpoint, parallel_through, perpendicular_through, reflect,
    signed_area, touch_circles, touch_line,
)


def P(x, y):
    return Punto(float(x), float(y))


class PrecisionTests(SimpleTestCase):

    def test_precision_por_tipo(self):
        self.assertIs(precision_of(1.0, 2), FAST)
        self.assertIs(precision_of(CONFIRM.num(1)), CONFIRM)
        self.assertIs(precision_of(Punto(CONFIRM.num(1), CONFIRM.num(0))), CONFIRM)

    def test_raiz_con_holgura(self):
        self.assertEqual(FAST.raiz(-1e-20, holgura=1e-15), 0.0)
        with self.assertRaises(DegenerateInput):
            FAST.raiz(-1.0)

    def test_confirmacion_tiene_mas_de_30_digitos(self):
        tercio = CONFIRM.num(1) / 3
        self.assertLess(abs(tercio * 3 - 1), CONFIRM.num('1e-35'))

    def test_tolerancia_invalida(self):
        with self.assertRaises(ValueError):
            Tolerancia(eps_detect=1e-30, eps_confirm=1e-24)


class PrimitivasTests(SimpleTestCase):

    def test_line_through_ejes(self):
        self.assertEqual(line_through(P(0, 0), P(1, 0)).coordenadas(), (0.0, 1.0, 0.0))
        self.assertEqual(line_through(P(0, 0), P(0, 1)).coordenadas(), (1.0, 0.0, 0.0))

    def test_line_through_diagonal(self):
        recta = line_through(P(0, 0), P(1, 1))
        self.assertAlmostEqual(recta.a, -recta.b)
        self.assertAlmostEqual(abs(recta.a), 1 / math.sqrt(2))
        self.assertAlmostEqual(recta.c, 0.0)

    def test_line_through_degenerada(self):
        with self.assertRaises(DegenerateInput):
            line_through(P(1, 1), P(1, 1))

    def test_intersect_ll(self):
        eje_x = Recta.normalizada(0.0, 1.0, 0.0)
        eje_y = Recta.normalizada(1.0, 0.0, 0.0)
        self.assertEqual(intersect_ll(eje_x, eje_y), P(0, 0))
        diagonal = Recta.normalizada(1.0, 1.0, -1.0)
        corte = intersect_ll(eje_x, diagonal)
        self.assertAlmostEqual(corte.x, 1.0)
        self.assertAlmostEqual(corte.y, 0.0)
        with self.assertRaises(ParallelLines):
            intersect_ll(eje_x, Recta.normalizada(0.0, 1.0, -1.0))

    def test_intersect_lc(self):
        unidad = Circulo(P(0, 0), 1.0)
        self.assertEqual(intersect_lc(Recta.normalizada(0.0, 1.0, 0.0), unidad), [P(-1, 0), P(1, 0)])
        self.assertEqual(intersect_lc(Recta.normalizada(0.0, 1.0, -1.0), unidad), [P(0, 1)])
        self.assertEqual(intersect_lc(Recta.normalizada(0.0, 1.0, -2.0), unidad), [])

    def test_intersect_cc(self):
        unidad = Circulo(P(0, 0), 1.0)
        self.assertEqual(intersect_cc(unidad, Circulo(P(2, 0), 1.0)), [P(1, 0)])
        p, q = intersect_cc(unidad, Circulo(P(1, 0), 1.0))
        self.assertAlmostEqual(p.x, 0.5)
        self.assertAlmostEqual(p.y, -math.sqrt(3) / 2)
        self.assertAlmostEqual(q.y, math.sqrt(3) / 2)
        self.assertEqual(intersect_cc(unidad, Circulo(P(3, 0), 1.0)), [])
        with self.assertRaises(CoincidentCircles):
            intersect_cc(unidad, Circulo(P(0, 0), 1.0))

    def test_construcciones_basicas(self):
        eje_x = Recta.normalizada(0.0, 1.0, 0.0)
        self.assertEqual(foot(P(1, 1), eje_x), P(1, 0))
        self.assertEqual(midpoint(P(0, 0), P(2, 4)), P(1, 2))
        self.assertEqual(reflect(P(0, 1), eje_x), P(0, -1))
        self.assertTrue(is_parallel(parallel_through(P(3, 5), eje_x), eje_x))
        perpendicular = perpendicular_through(P(3, 5), eje_x)
        self.assertTrue(is_perpendicular(perpendicular, eje_x))
        self.assertTrue(on(P(3, 5), perpendicular))

    def test_medidas(self):
        self.assertEqual(signed_area(P(0, 0), P(1, 0), P(0, 1)), 0.5)
        self.assertAlmostEqual(angle(P(1, 0), P(0, 0), P(0, 1)), math.pi / 2)
        self.assertEqual(dist(P(0, 0), P(3, 4)), 5.0)

    def test_circle_through(self):
        circulo = circle_through(P(0, 0), P(1, 0), P(0, 1))
        self.assertAlmostEqual(circulo.centro.x, 0.5)
        self.assertAlmostEqual(circulo.centro.y, 0.5)
        self.assertAlmostEqual(circulo.radio, math.sqrt(2) / 2)

    def test_puntos_de_contacto(self):
        contacto = touch_line(Circulo(P(0, 0), 1.0), Recta.normalizada(0.0, 1.0, -1.0))
        self.assertAlmostEqual(contacto.x, 0.0)
        self.assertAlmostEqual(contacto.y, 1.0)
        externo = touch_circles(Circulo(P(0, 0), 1.0), Circulo(P(3, 0), 2.0))
        self.assertAlmostEqual(externo.x, 1.0)
        interno = touch_circles(Circulo(P(0, 0), 3.0), Circulo(P(1, 0), 2.0))
        self.assertAlmostEqual(interno.x, 3.0)
        with self.assertRaises(DegenerateInput):
            touch_circles(Circulo(P(0, 0), 1.0), Circulo(P(0, 0), 2.0))

    def test_predicados(self):
        self.assertTrue(collinear(P(0, 0), P(1, 1), P(2, 2)))
        self.assertFalse(collinear(P(0, 0), P(1, 1), P(2, 2.001)))
        self.assertTrue(tangent(Circulo(P(0, 0), 1.0), Recta.normalizada(0.0, 1.0, -1.0)))
        self.assertTrue(is_perpendicular(Recta.normalizada(0.0, 1.0, 0.0), Recta.normalizada(1.0, 0.0, 0.0)))
        tres = [Recta.normalizada(1.0, 0.0, 0.0), Recta.normalizada(0.0, 1.0, 0.0), Recta.normalizada(1.0, 1.0, 0.0)]
        self.assertTrue(concurrent(*tres))

    def test_confirmacion_mas_estricta(self):
        n = CONFIRM.num
        tol = Tolerancia()
        casi = Punto(n(2), n(2) + n('1e-15'))
        residuo = residuo_collinear(Punto(n(0), n(0)), Punto(n(1), n(1)), casi, tol)
        self.assertGreater(residuo, tol.eps_confirm)
        self.assertFalse(collinear(Punto(n(0), n(0)), Punto(n(1), n(1)), casi, tol))

    @hsettings(max_examples=60, deadline=None)
    @given(
        st.floats(0, 2 * math.pi), st.floats(0.5, 2.0),
        st.floats(-10, 10), st.floats(-10, 10),
    )
    def test_invariancia_por_semejanza(self, theta, k, tx, ty):
        def mover(p):
            c, s = math.cos(theta), math.sin(theta)
            return P(k * (c * p.x - s * p.y) + tx, k * (s * p.x + c * p.y) + ty)

        a, b, m = P(0, 0), P(3, 1), midpoint(P(0, 0), P(3, 1))
        tol = Tolerancia(escala=3 * k)
        self.assertTrue(collinear(mover(a), mover(b), mover(m), tol))
        self.assertFalse(collinear(mover(a), mover(b), mover(P(1, 2)), tol))
