import math
from unittest import mock

from django.test import SimpleTestCase

from applications.nucleo.excepciones import AmbiguousSelection, DegenerateInput, SolverFailure, UnsupportedProblem
from applications.nucleo.precision import CONFIRM, Tolerancia
from applications.nucleo.predicados import is_perpendicular, tangent
from applications.nucleo.primitivas import Circulo, Punto, Recta, dist, line_through

from .solver import (
    ProblemaTangencia, dentro_del_triangulo, externa_a, interna_a, select, solve,
)


def P(x, y):
    return Punto(float(x), float(y))


# Triángulo rectángulo 3-4-5: A=(0,0), B=(3,0), C=(0,4)
A, B, C = P(0, 0), P(3, 0), P(0, 4)
GERGONNE = P(9 / 11, 8 / 11)


class FamiliasTests(SimpleTestCase):

    def test_ppp(self):
        (sol,) = solve((P(0, 0), P(2, 0), P(0, 2)))
        self.assertAlmostEqual(sol.centro.x, 1.0)
        self.assertAlmostEqual(sol.centro.y, 1.0)
        self.assertAlmostEqual(sol.radio, math.sqrt(2))

    def test_ppp_alineados_sin_solucion(self):
        self.assertEqual(solve((P(0, 0), P(1, 0), P(2, 0))), [])

    def test_ppl_coeficiente_cuadratico_nulo(self):
        (sol,) = solve((P(-1, 1), P(1, 1), Recta.normalizada(0.0, 1.0, 0.0)))
        self.assertAlmostEqual(sol.centro.x, 0.0)
        self.assertAlmostEqual(sol.centro.y, 1.0)
        self.assertAlmostEqual(sol.radio, 1.0)
        (contacto,) = sol.contactos
        self.assertAlmostEqual(contacto.x, 0.0)
        self.assertAlmostEqual(contacto.y, 0.0)

    def test_lll_incirculo_y_excirculos(self):
        lados = (line_through(B, C), line_through(C, A), line_through(A, B))
        soluciones = solve(lados, Tolerancia(escala=5.0))
        self.assertEqual([round(s.radio, 9) for s in soluciones], [1.0, 2.0, 3.0, 6.0])
        incirculo = soluciones[0]
        self.assertAlmostEqual(incirculo.centro.x, 1.0)
        self.assertAlmostEqual(incirculo.centro.y, 1.0)

    def test_llp_centro_perpendicular_a_bc(self):
        tol = Tolerancia(escala=5.0)
        soluciones = solve((line_through(A, B), line_through(A, C), GERGONNE), tol)
        menor = soluciones[0]
        self.assertAlmostEqual(menor.radio, 5 / 11)
        self.assertTrue(is_perpendicular(line_through(GERGONNE, menor.centro), line_through(B, C), tol))

    def test_clp(self):
        circulo = Circulo(P(0, 0), 1.0)
        recta = Recta.normalizada(0.0, 1.0, 3.0)
        punto = P(3, 0)
        soluciones = solve((circulo, recta, punto), Tolerancia(escala=6.0))
        self.assertGreaterEqual(len(soluciones), 2)
        for sol in soluciones:
            self.assertAlmostEqual(dist(sol.centro, punto), sol.radio)
            self.assertAlmostEqual(abs(recta.evaluar(sol.centro)), sol.radio)
            self.assertTrue(tangent(sol.circulo, circulo, Tolerancia(escala=6.0)))

    def test_llc_con_pista_interna(self):
        circulo = Circulo(P(1.5, 2), 2.5)
        problema = ProblemaTangencia(
            (line_through(A, B), line_through(A, C), circulo), pistas=(None, None, 'internal'),
        )
        soluciones = solve(problema, Tolerancia(escala=5.0))
        self.assertTrue(soluciones)
        self.assertTrue(all(interna_a(circulo)(s) for s in soluciones))

    def test_soluciones_ordenadas_por_radio(self):
        lados = (line_through(B, C), line_through(C, A), line_through(A, B))
        radios = [s.radio for s in solve(lados, Tolerancia(escala=5.0))]
        self.assertEqual(radios, sorted(radios))

    def test_familia_no_soportada(self):
        with self.assertRaises(UnsupportedProblem):
            solve((Circulo(P(0, 0), 1.0), Circulo(P(5, 0), 1.0), P(2, 3)))

    def test_restriccion_repetida(self):
        with self.assertRaises(DegenerateInput):
            ProblemaTangencia((P(0, 0), P(0, 0), P(1, 1)))

    def test_familias_canonicas(self):
        recta = Recta.normalizada(0.0, 1.0, 0.0)
        circulo = Circulo(P(0, 5), 1.0)
        self.assertEqual(ProblemaTangencia((P(0, 1), recta, Recta.normalizada(1.0, 0.0, 0.0))).familia, 'LLP')
        self.assertEqual(ProblemaTangencia((circulo, P(0, 1), recta)).familia, 'CLP')

    def test_newton_sin_convergencia_se_informa(self):
        with mock.patch('applications.apolonio.solver._residuo', return_value=1.0), \
                mock.patch('applications.apolonio.solver._newton', side_effect=SolverFailure('sin convergencia')):
            with self.assertLogs('applications.apolonio.solver', level='WARNING') as logs:
                with self.assertRaises(SolverFailure):
                    solve((P(0, 0), P(2, 0), P(0, 2)))
        self.assertIn('PPP', logs.output[0])


class ConfirmacionTests(SimpleTestCase):
    """Las soluciones en precisión de confirmación cumplen sus ecuaciones con eps_confirm."""

    def setUp(self):
        n = CONFIRM.num
        self.A, self.B, self.C = Punto(n(0), n(0)), Punto(n(3), n(0)), Punto(n(0), n(4))
        self.D = Punto(n(9) / 11, n(8) / 11)
        self.tol = Tolerancia(escala=5.0)
        self.eps = self.tol.eps_confirm * 5

    def test_lll(self):
        lados = (line_through(self.B, self.C), line_through(self.C, self.A), line_through(self.A, self.B))
        for sol in solve(lados, self.tol):
            for recta in lados:
                self.assertLess(abs(abs(recta.evaluar(sol.centro)) - sol.radio), self.eps)

    def test_llp(self):
        rectas = (line_through(self.A, self.B), line_through(self.A, self.C))
        soluciones = solve((*rectas, self.D), self.tol)
        self.assertTrue(soluciones)
        for sol in soluciones:
            self.assertLess(abs(dist(sol.centro, self.D) - sol.radio), self.eps)
            for recta in rectas:
                self.assertLess(abs(abs(recta.evaluar(sol.centro)) - sol.radio), self.eps)

    def test_ppc(self):
        circulo = Circulo(Punto(CONFIRM.num(1.5), CONFIRM.num(2)), CONFIRM.num(2.5))
        soluciones = solve((self.D, Punto(CONFIRM.num(1), CONFIRM.num(1)), circulo), self.tol)
        self.assertTrue(soluciones)
        for sol in soluciones:
            d = dist(sol.centro, circulo.centro)
            residuo = min(abs(d - (sol.radio + circulo.radio)), abs(d - abs(sol.radio - circulo.radio)))
            self.assertLess(residuo, self.eps)


class SeleccionTests(SimpleTestCase):

    def setUp(self):
        lados = (line_through(B, C), line_through(C, A), line_through(A, B))
        self.soluciones = solve(lados, Tolerancia(escala=5.0))

    def test_select_unica(self):
        incirculo = select(self.soluciones, dentro_del_triangulo(A, B, C))
        self.assertAlmostEqual(incirculo.radio, 1.0)

    def test_select_ninguna(self):
        with self.assertRaises(AmbiguousSelection) as ctx:
            select(self.soluciones, lambda s: s.radio > 100)
        self.assertEqual(ctx.exception.candidatos, 0)

    def test_select_varias(self):
        with self.assertRaises(AmbiguousSelection) as ctx:
            select(self.soluciones, lambda s: True)
        self.assertEqual(ctx.exception.candidatos, 4)

    def test_externa(self):
        circulo = Circulo(P(10, 10), 1.0)
        self.assertTrue(externa_a(circulo)(Circulo(P(13, 10), 2.0)))
        self.assertFalse(externa_a(circulo)(Circulo(P(10.5, 10), 0.5)))
