import agriont


def test_graph_basics():
    g = agriont.Graph()
    assert len(g) == 0
    assert g.insert("http://e/a", "http://e/p", "http://e/b")
    assert not g.insert("http://e/a", "http://e/p", "http://e/b")
    assert len(g) == 1
    assert g.contains("http://e/a", "http://e/p", "http://e/b")


def test_turtle_round_trip():
    g = agriont.parse_turtle(
        "@prefix ex: <http://e/> . ex:a ex:p ex:b , 5 ."
    )
    assert len(g) == 2
    text = agriont.serialize_turtle(g)
    again = agriont.parse_turtle(text)
    assert len(again) == 2


def test_schema_and_metrics():
    schema = agriont.build_core_schema()
    metrics = agriont.compute_metrics(schema)
    assert metrics["classCount"] >= 45
    assert metrics["objectPropertyCount"] >= 15
    assert metrics["dataPropertyCount"] >= 14


def test_inference_and_query():
    ns = agriont.DEFAULT_NAMESPACE
    g = agriont.build_example_dataset()
    result = agriont.evaluate_query(
        g,
        "SELECT ?x WHERE { ?x a agriont:Product }",
        infer=True,
    )
    values = {row["x"]["value"] for row in result["rows"]}
    assert ns + "product_0871" in values


def test_subclass_closure():
    ns = agriont.DEFAULT_NAMESPACE
    closure = set(agriont.subclass_closure(agriont.build_core_schema()))
    assert (ns + "DairyFood", ns + "Product") in closure


def test_ingest_and_warehouse():
    g = agriont.build_core_schema()
    report = agriont.ingest_geo(
        g,
        "name,iso_3166_1,longitude,latitude,population,area_km2,"
        "agri_land_km2,climate,wikipedia\nIreland,IE,-8.0,53.0,,,,,\n",
        "name,iso_3166_2,country_code,longitude,latitude,population,"
        "area_km2,wikipedia\nDublin,IE-D,IE,,,,,\n",
    )
    assert report["individualsCreated"] == 2
    materialized = agriont.materialize(g)
    ddl = agriont.generate_ddl(materialized)
    assert "CREATE TABLE farm" in ddl
    rows = agriont.export_rows(materialized)
    assert set(rows) == {
        "crop", "farm", "farmer", "product", "soil_condition",
        "weather_condition",
    }
