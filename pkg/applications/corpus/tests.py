import json
import os
import shutil
import tempfile
from io import StringIO

import openpyxl
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from applications.detectores.hallazgos import EQUALITY, RATIO
from applications.lenguaje.evaluador import evaluate
from applications.lenguaje.formato import format as formatear
from applications.lenguaje.parser import parse
from applications.nucleo.conf import settings
from applications.triangulos.triangulo import Triangulo

from .ejecucion import run_corpus, verificar
from .entradas import RESTRINGIDA, EntradaCorpus, cargar, validar_entrada
from .informe import a_dict, a_json, a_xlsx, tabla

# Pocas muestras: las entradas de forma única repiten la misma forma
MUESTRAS = 3


def _entrada(fuente, id='prueba', estado='relation', tipo=EQUALITY, opcional=False):
    return EntradaCorpus(id=id, archivo=f'{id}.geo', estado=estado, tipo=tipo,
                         script=parse(fuente), fuente=fuente, opcional=opcional)


class CargaTestCase(SimpleTestCase):
    def test_manifiesto_completo(self):
        entradas = cargar()
        self.assertGreaterEqual(len(entradas), 90)
        self.assertEqual(len({e.id for e in entradas}), len(entradas))
        archivos = {e.archivo for e in entradas}
        en_disco = {n for n in os.listdir(settings.GEX_CORPUS_DIR) if n.endswith('.geo')}
        self.assertEqual(archivos, en_disco)

    def test_formato_ida_y_vuelta(self):
        for entrada in cargar():
            with self.subTest(entrada.id):
                self.assertEqual(parse(formatear(entrada.script)), entrada.script)

    def test_opcionales(self):
        opcionales = {e.id for e in cargar() if e.opcional}
        self.assertIn('intouch-orthic-mittenpunkt', opcionales)
        self.assertNotIn('ratio-7-9-10', opcionales)

    def test_solo(self):
        entradas = cargar(solo={'spoke', 'ratio-7-9-10'})
        self.assertEqual([e.id for e in entradas], ['spoke', 'ratio-7-9-10'])
        with self.assertRaises(ValueError):
            cargar(solo={'no-existe'})

    def test_tipo_no_corresponde(self):
        entrada = _entrada('triangle ABC; D = gergonne(A, B, C); assert dist(A, D) = dist(A, D);',
                           tipo='collinear')
        with self.assertRaisesMessage(ValueError, 'ninguna afirmación'):
            validar_entrada(entrada)

    def test_restringida_sin_restricciones(self):
        entrada = _entrada('triangle ABC; assert a = a;', estado=RESTRINGIDA)
        with self.assertRaises(ValueError):
            validar_entrada(entrada)

    def test_tipo_desconocido(self):
        with self.assertRaises(ValueError):
            validar_entrada(_entrada('triangle ABC; assert a = a;', tipo='bonita'))


class ManifiestoInvalidoTestCase(SimpleTestCase):
    def setUp(self):
        self.dir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.dir)
        with open(os.path.join(self.dir, 'uno.geo'), 'w', encoding='utf-8') as f:
            f.write('triangle ABC;\nD = gergonne(A, B, C);\nE = touch(BC);\nassert colline(A, D, E);\n')

    def escribir(self, datos):
        with open(os.path.join(self.dir, 'manifest.json'), 'w', encoding='utf-8') as f:
            json.dump(datos, f)

    def test_estado_fuera_de_esquema(self):
        self.escribir({'entries': [{'id': 'uno', 'file': 'uno.geo', 'status': 'dudosa', 'kind': 'collinear'}]})
        with self.assertRaisesMessage(ValueError, 'manifiesto inválido'):
            cargar(self.dir)

    def test_id_repetido(self):
        ficha = {'id': 'uno', 'file': 'uno.geo', 'status': 'incidence', 'kind': 'collinear'}
        self.escribir({'entries': [ficha, ficha]})
        with self.assertRaisesMessage(ValueError, 'repetido'):
            cargar(self.dir)

    def test_script_con_error_de_sintaxis(self):
        with open(os.path.join(self.dir, 'malo.geo'), 'w', encoding='utf-8') as f:
            f.write('triangle ABC;\nD = gergonne(A, B;\n')
        self.escribir({'entries': [{'id': 'malo', 'file': 'malo.geo', 'status': 'incidence', 'kind': 'collinear'}]})
        with self.assertRaisesMessage(ValueError, 'malo.geo:2:'):
            cargar(self.dir)

    def test_comando_devuelve_error_de_entrada(self):
        self.escribir({'entries': []})
        with self.assertRaises(CommandError) as ctx:
            call_command('geo_corpus', '--dir', self.dir, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class VerificacionTestCase(SimpleTestCase):
    def test_corpus_requerido_pasa(self):
        informe = run_corpus([e for e in cargar() if not e.opcional], MUESTRAS, seed=0)
        for fila in informe.filas:
            with self.subTest(fila.id):
                self.assertTrue(fila.cumple, fila.error or fila.fallida)
                self.assertLessEqual(fila.residuo_confirmacion, settings.GEX_EPS_CONFIRM)
        self.assertTrue(informe.ok)

    def test_propiedades_intrinsecas(self):
        ids = {'spoke', 'tripolar', 'barycentric', 'area-formula', 'defining-collinearity',
               'llp-perpendicular', 'intouch-symmedian', 'circumradii-sum'}
        informe = run_corpus(cargar(solo=ids), 5, seed=3)
        self.assertEqual({f.id for f in informe.filas if f.cumple}, ids)

    def test_mutacion_del_coeficiente(self):
        fuente = (settings.GEX_CORPUS_DIR / 'razon-7-9-10.geo').read_text(encoding='utf-8')
        corrupta = fuente.replace('2*dist(C, D)', '3*dist(C, D)')
        self.assertNotEqual(corrupta, fuente)
        fila = verificar(_entrada(corrupta, tipo=RATIO, estado=RESTRINGIDA), MUESTRAS)
        self.assertFalse(fila.cumple)
        self.assertGreater(fila.residuo_rapido, 1e-3)
        self.assertEqual(fila.fallida, 'dist(A, D) = 3 * dist(C, D)')

    def test_razones_de_forma_unica(self):
        informe = run_corpus(cargar(solo={'ratio-7-9-10', 'ratio-5-8-9', 'ratio-4-9-10', 'apothem-8-5-4'}), 4)
        self.assertTrue(informe.ok)
        self.assertEqual({f.muestras for f in informe.filas}, {4})

    def test_incentro_60_en_las_dos_ramas(self):
        fuente = (settings.GEX_CORPUS_DIR / 'incentro-60.geo').read_text(encoding='utf-8')
        rayos = fuente.replace(
            'abs(deg(90) - angle(A, B, D)) = abs(deg(90) - angle(A, E, D))', 'angle(A, B, D) = angle(A, E, D)',
        )
        # a > c y a < c, ambos con B = 60 grados
        a_mayor, a_menor = Triangulo.from_sides(8.0, 7.0, 3.0), Triangulo.from_sides(3.0, 7.0, 8.0)
        self.assertTrue(evaluate(parse(fuente), a_mayor).todas_cumplen)
        self.assertTrue(evaluate(parse(fuente), a_menor).todas_cumplen)
        self.assertTrue(evaluate(parse(rayos), a_mayor).todas_cumplen)
        self.assertFalse(evaluate(parse(rayos), a_menor).todas_cumplen)

    def test_cuerda_y_angulo_con_mas_muestras(self):
        informe = run_corpus(cargar(solo={'gergonne-chord', 'incenter-60'}), 8, seed=0)
        for fila in informe.filas:
            with self.subTest(fila.id):
                self.assertTrue(fila.cumple, fila.error or fila.fallida)

    def test_error_del_motor_es_fila_fallida(self):
        # dos rectas paralelas: intersect falla en todas las muestras
        fila = verificar(_entrada('triangle ABC; E = intersect(BC, parallel(A, BC)); assert dist(A, E) = 1;'))
        self.assertFalse(fila.cumple)
        self.assertIn('rectas paralelas', fila.error)

    @override_settings(GEX_SAMPLER_MAX_STARTS=50)
    def test_restricciones_imposibles(self):
        fila = verificar(_entrada('triangle ABC; constrain a = b + c; assert a = a;', estado=RESTRINGIDA), 2)
        self.assertFalse(fila.cumple)
        self.assertEqual(fila.muestras, 0)

    def test_opcional_no_cuenta(self):
        entradas = [_entrada('triangle ABC; D = gergonne(A, B, C); assert dist(A, D) = 2*dist(A, D);',
                             opcional=True)]
        informe = run_corpus(entradas, 2)
        self.assertEqual(len(informe.fallidas), 1)
        self.assertTrue(informe.ok)

    def test_hilos_no_cambian_el_informe(self):
        entradas = cargar(solo={'spoke', 'kissing-circles', 'isotomic', 'pararadius'})
        self.assertEqual(a_json(run_corpus(entradas, 3, seed=7, hilos=1)),
                         a_json(run_corpus(entradas, 3, seed=7, hilos=3)))


class InformeTestCase(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        entradas = cargar(solo={'spoke', 'isotomic'}) + [
            _entrada('triangle ABC; D = gergonne(A, B, C); assert dist(A, D) = dist(B, D);', id='falsa'),
        ]
        cls.informe = run_corpus(entradas, 2, seed=1)

    def test_json(self):
        datos = a_dict(self.informe)
        self.assertEqual(datos['summary'], {'entries': 3, 'passed': 2, 'failed': 1, 'failed_required': 1})
        falsa = datos['entries'][2]
        self.assertFalse(falsa['pass'])
        self.assertEqual(falsa['failed_assertion'], 'dist(A, D) = dist(B, D)')
        self.assertEqual(json.loads(a_json(self.informe)), datos)

    def test_tabla(self):
        lineas = tabla(self.informe).splitlines()
        self.assertTrue(lineas[1].startswith('spoke'))
        self.assertTrue(lineas[1].endswith('PASS'))
        self.assertTrue(lineas[3].endswith('FAIL'))
        self.assertEqual(lineas[-1], '3 entradas, 1 fallidas, 1 requeridas fallidas')

    def test_xlsx(self):
        with tempfile.TemporaryDirectory() as d:
            ruta = os.path.join(d, 'corpus.xlsx')
            a_xlsx(self.informe, ruta)
            sheet = openpyxl.load_workbook(ruta).active
            filas = list(sheet.iter_rows(values_only=True))
        self.assertEqual(filas[0][0], 'Entrada')
        self.assertEqual([f[0] for f in filas[1:]], ['spoke', 'isotomic', 'falsa'])
        self.assertEqual(filas[3][8], 'No')


class ComandoTestCase(SimpleTestCase):
    def test_corpus_parcial_sale_bien(self):
        salida = StringIO()
        with tempfile.TemporaryDirectory() as d:
            ruta = os.path.join(d, 'informe.json')
            call_command('geo_corpus', '--samples', '2', '--only', 'spoke,ratio-7-9-10', '--out', ruta,
                         stdout=salida)
            with open(ruta, encoding='utf-8') as f:
                datos = json.load(f)
        self.assertEqual(datos['summary']['failed'], 0)
        self.assertIn('ratio-7-9-10', salida.getvalue())

    def test_entrada_fallida_sale_con_1(self):
        d = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, d)
        with open(os.path.join(d, 'falsa.geo'), 'w', encoding='utf-8') as f:
            f.write('triangle ABC;\nD = gergonne(A, B, C);\nassert dist(A, D) = dist(B, D);\n')
        with open(os.path.join(d, 'manifest.json'), 'w', encoding='utf-8') as f:
            json.dump({'entries': [{'id': 'falsa', 'file': 'falsa.geo', 'status': 'relation',
                                    'kind': 'equality'}]}, f)
        with self.assertRaises(CommandError) as ctx:
            call_command('geo_corpus', '--dir', d, '--samples', '2', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_muestras_invalidas(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('geo_corpus', '--samples', '0', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
