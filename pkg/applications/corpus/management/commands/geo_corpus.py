# applications/corpus/management/commands/geo_corpus.py

from django.core.management.base import BaseCommand, CommandError

from applications.corpus.ejecucion import MUESTRAS, run_corpus
from applications.corpus.entradas import cargar
from applications.corpus.informe import a_json, a_xlsx, tabla
from applications.explorador.management.commands._comun import ERROR_ASERCION, ERROR_ENTRADA
from applications.nucleo.conf import settings


class Command(BaseCommand):
    help = 'Verifica numéricamente todas las propiedades del corpus.'

    def add_arguments(self, parser):
        parser.add_argument('--samples', type=int, default=MUESTRAS, help='Triángulos por entrada.')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--dir', help='Directorio del corpus (por defecto GEX_CORPUS_DIR).')
        parser.add_argument('--only', default='', help='Ids de entradas separados por coma.')
        parser.add_argument('--threads', type=int, help='Hilos (por defecto GEX_THREADS).')
        parser.add_argument('--out', help='Archivo JSON del informe.')
        parser.add_argument('--xlsx', help='Planilla .xlsx del informe.')

    def handle(self, *args, **options):
        if options['samples'] < 1:
            raise CommandError('--samples debe ser positivo', returncode=ERROR_ENTRADA)
        solo = {i.strip() for i in options['only'].split(',') if i.strip()} or None
        try:
            entradas = cargar(options['dir'], solo=solo)
        except (ValueError, OSError) as e:
            raise CommandError(str(e), returncode=ERROR_ENTRADA) from e

        informe = run_corpus(
            entradas, options['samples'], options['seed'],
            hilos=options['threads'] or settings.GEX_THREADS,
        )
        self.stdout.write(tabla(informe), ending='')
        if options['out']:
            with open(options['out'], 'w', encoding='utf-8', newline='\n') as f:
                f.write(a_json(informe))
            self.stdout.write(self.style.SUCCESS(f'Informe escrito en {options["out"]}'))
        if options['xlsx']:
            a_xlsx(informe, options['xlsx'])
            self.stdout.write(self.style.SUCCESS(f'Planilla escrita en {options["xlsx"]}'))

        if not informe.ok:
            ids = ', '.join(f.id for f in informe.fallidas_requeridas)
            raise CommandError(f'entradas fallidas: {ids}', returncode=ERROR_ASERCION)
