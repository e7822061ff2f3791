#include "nps7/end_conditions.hpp"

namespace nps7 {

namespace {

// Each row reads:  sum_j u[j] * U_j  =  (1/h^7) * ( sum_j y[j] * y_j  +  sum_m d[m] * h^m y0^(m) ).
// Values are transcribed verbatim as exact rationals.

const std::vector<EndRowSpec> kStandardRows = {
    {1,
     {{0, "1"}, {1, "-10"}, {4, "1"}},
     {{0, "512540/27"}, {1, "-20160"}, {2, "1260"}, {3, "-2240/27"}},
     {{1, "161000/9"}, {2, "23800/3"}, {3, "6160/3"}, {4, "280"}}},
    {2,
     {{1, "1"}, {2, "-30666/8867"}, {5, "1"}},
     {{1, "-957600/8867"}, {2, "1048320/8867"}, {3, "-90720/8867"}},
     {{1, "-866880/8867"},
      {2, "-1209600/8867"},
      {3, "-829920/8867"},
      {4, "-352800/8867"},
      {5, "-87864/8867"}}},
    {3,
     {{2, "1"}, {3, "-278026/94221"}, {6, "1"}},
     {{2, "-67340/10469"}, {3, "80640/10469"}, {4, "-700/551"}},
     {{1, "-54040/10469"},
      {2, "-4200/361"},
      {3, "-20720/1653"},
      {4, "-85400/10469"},
      {5, "-95536/31407"}}},
    {4,
     {{3, "1"}, {7, "1"}},
     {{3, "10808537040/487056529"},
      {4, "-13373418240/487056529"},
      {5, "2564881200/487056529"}},
     {{1, "8243655840/487056529"},
      {2, "26287914240/487056529"},
      {3, "40576352880/487056529"},
      {4, "39377200800/487056529"},
      {5, "25438766892/487056529"},
      {6, "9474762304/487056529"}}},
    {5,
     {{4, "1"}, {8, "1"}},
     {{4, "2645350155/436783036"},
      {5, "-869117760/109195759"},
      {6, "831120885/436783036"}},
     {{1, "31279815/7530742"},
      {2, "3666455415/218391518"},
      {3, "3572264955/109195759"},
      {4, "8717751945/218391518"},
      {5, "3525702999/109195759"},
      {6, "1634628387/109195759"}}},
    {6,
     {{5, "1"}, {9, "1"}},
     {{5, "132838307280/61865369749"},
      {6, "-183300929280/61865369749"},
      {7, "50462622000/61865369749"}},
     {{1, "82375685280/61865369749"},
      {2, "402603647040/61865369749"},
      {3, "946588828080/61865369749"},
      {4, "1390554453120/61865369749"},
      {5, "1350858565644/61865369749"},
      {6, "749461929944/61865369749"}}},
};

const std::vector<EndRowSpec> kImprovedRows = {
    {1,
     {{0, "1"},
      {1, "-24407/109"},
      {2, "-59362/109"},
      {3, "-10662/109"},
      {4, "-907/109"},
      {5, "1"}},
     {{0, "66633336/545"},
      {1, "-19958400/109"},
      {2, "9979200/109"},
      {3, "-4435200/109"},
      {4, "1247400/109"},
      {5, "-798336/545"}},
     {{1, "9114336/109"}, {2, "1995840/109"}, {7, "-80/109"}}},
    {2,
     {{1, "1"},
      {2, "202055040421/554613069"},
      {3, "77878525838/184871023"},
      {4, "18661788874/184871023"},
      {5, "-2434662535/554613069"},
      {6, "1"}},
     {{1, "-4011644165760/184871023"},
      {2, "8861887188000/184871023"},
      {3, "-73815832428800/1663839207"},
      {4, "4618760731200/184871023"},
      {5, "-1470208924800/184871023"},
      {6, "1826678971040/1663839207"}},
     {{1, "-4345911046400/554613069"},
      {2, "-1035868310400/184871023"},
      {3, "-183470425600/184871023"}}},
    {3,
     {{2, "1"},
      {3, "-13173366154319505819/604803696004634"},
      {4, "-5923535526089565973/302401848002317"},
      {5, "-2639790737228529743/604803696004634"},
      {7, "1"}},
     {{2, "25352931909798309915/43200264000331"},
      {3, "-198185856313975120000/129600792000993"},
      {4, "72535593878062755750/43200264000331"},
      {5, "-44672825515677652800/43200264000331"},
      {6, "44958164899589796925/129600792000993"},
      {7, "-2139803134054971840/43200264000331"}},
     {{1, "5764036699720950200/43200264000331"},
      {2, "7374675959642702700/43200264000331"},
      {3, "3273172503578299200/43200264000331"},
      {4, "521467194925746900/43200264000331"}}},
    {4,
     {{3, "1"},
      {4, "-3169885805313999875741/17618985121607404312"},
      {6, "-544760103861334609083/17618985121607404312"},
      {7, "1"}},
     {{3, "5366584014500607349360/19821358261808329851"},
      {4, "-1627194491533397967735555/1127615047782873875968"},
      {5, "5581229831865256388400/2202373140200925539"},
      {6, "-324347788172453021646845/158570866094466638808"},
      {7, "1793040053953186573920/2202373140200925539"},
      {8, "-147257531382013448691645/1127615047782873875968"}},
     {{1, "-78317811652764229087465/845711285837155406976"},
      {2, "-42412130734120984954425/140951880972859234496"},
      {3, "-13509365844145615609375/35237970243214808624"},
      {4, "-7826257773953806554675/35237970243214808624"},
      {5, "-447768854035545682017/8809492560803702156"}}},
    {5,
     {{4, "1"},
      {7, "-6169811365491003355386625/364845537886699795641421"},
      {9, "1"}},
     {{4, "413182203198678792199193360481/373601830795980590736815104"},
      {5, "-1011762526223941981900336800/364845537886699795641421"},
      {6, "998387082478934194463004566965/354629862825872201363461212"},
      {7, "-566429213407879867786917120/364845537886699795641421"},
      {8, "173230355267937275186019127455/373601830795980590736815104"},
      {9, "-5254626822196644195075230752/88657465706468050340865303"}},
     {{1, "1828802733123508354716945025585/7565437073618606962420505856"},
      {2, "54937023892836663800655898465/74170951702143205513926528"},
      {3, "319183920456421230207708911935/315226544734108623434187744"},
      {4, "81879551659139637198985554365/105075514911369541144729248"},
      {5, "2991554077139003376141526763/8756292909280795095394104"},
      {6, "303485670688565607390252013/4378146454640397547697052"}}},
    {6,
     {{5, "1"}, {10, "1"}},
     {{5, "19038680213948167651954555270266/43087137994818537402205515625"},
      {6, "-3612553213748861716357961962885/2680364680381671574716400716"},
      {7, "4872382360659412438888663650/2757576831668386393741153"},
      {8, "-3637650046079073899112436800/2757576831668386393741153"},
      {9, "396380487483749310137552942650/670091170095417893679100179"},
      {10, "-25866940054548307411938055846689/172348551979274149608822062500"}},
     {{1, "38692597856846972600037888063421/698011635516060305915729353125"},
      {2, "9138473244848295227157642242648/46534109034404020394381956875"},
      {3, "2879180812841847947352594547754/9306821806880804078876391375"},
      {4, "1170428496335992779989052992/4278998531899220266150065"},
      {5, "2186365487813281315497916274/15909097105779152271583575"},
      {6, "1319003601532979667100927096/41363652475025795906117295"}}},
};

}  // namespace

const std::vector<EndRowSpec>& published_end_rows(EndConditionMode mode) {
  return mode == EndConditionMode::Standard ? kStandardRows : kImprovedRows;
}

}  // namespace nps7
