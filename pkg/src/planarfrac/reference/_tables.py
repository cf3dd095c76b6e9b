"""Frozen self-similar solution tables.

Generated by tools/generate_similarity_tables.py; the defining
conservation identities of these tables are re-checked in the
test suite. Do not edit by hand.
"""

import numpy as np

RADIAL_M_GAMMA = np.float64(0.6980206231212768)
RADIAL_M_KLOG = np.float64(-0.09370508359796077)
RADIAL_M_A_TIP = np.float64(1.6765575235626442)
RADIAL_M_B_TIP = -0.23112042478354491

RADIAL_M_RHO = np.array([
    1e-06, 6.324947337527431e-05, 0.00017706777317299323, 0.0003244561556937434, 0.0004989911791844964,
    0.0006969599667807562, 0.0009158569273438537, 0.0011538422456335625, 0.0014094900544790328, 0.0016816528416331944,
    0.0019693809800111644, 0.0022718715099788295, 0.002588433765870414, 0.0029184653263325793, 0.0032614346123424147,
    0.003616867940975844, 0.003984339666826754, 0.004363464523993305, 0.004753891574562139, 0.0051552993545614335,
    0.005567391928891486, 0.005989895647413141, 0.006422556449664049, 0.006865137604373173, 0.007317417797547338,
    0.007779189502927735, 0.008250257583363448, 0.008730438082665165, 0.009219557175834526, 0.009717450251940549,
    0.01022396110884603, 0.010738941242838345, 0.011262249219255203, 0.011793750112609096, 0.012333315006647808,
    0.012880820546348875, 0.01343614853511407, 0.013999185571467336, 0.014569822720413237, 0.015147955215319225,
    0.015733482186773083, 0.016326306415358222, 0.016926334105702722, 0.017533474679506604, 0.018147640585547468,
    0.018768747124916385, 0.019396712289950647, 0.02003145661551503, 0.020672903041441457, 0.021320976785074452,
    0.021975605222988602, 0.022636717781047446, 0.023304245832063454, 0.023978122600397295, 0.02465828307290402,
    0.025344663915693882, 0.026037203396229672, 0.026735841310329155, 0.027440518913683227, 0.028151178857537665,
    0.028867765128219022, 0.029590222990214857, 0.0303184989325448, 0.03105254061818223, 0.03179229683630752,
    0.03253771745719293, 0.03328875338953573, 0.034045356540071965, 0.03480747977531689, 0.03557507688529059,
    0.03634810254909868, 0.03712651230224827, 0.037910262505588606, 0.03869931031577448, 0.039493613657157874,
    0.04029313119502068, 0.04109782231006777, 0.041907647074105145, 0.042722566226833805, 0.0435425411536945,
    0.04436753386470342, 0.04519750697422248, 0.04603242368161256, 0.04687224775272025, 0.04771694350215359,
    0.048566475776303526, 0.04942080993707196, 0.050279911846269044, 0.05114374785064475, 0.05201228476752273,
    0.05288548987100494, 0.05376333087871928, 0.054645775939082736, 0.05553279361905469, 0.05642435289235699,
    0.057320423128137614, 0.05822097408005766, 0.05912597587578093, 0.06003539900684802, 0.06094921431891662,
    0.061867393002351584, 0.06278990658314909, 0.06371672691417941, 0.06464782616673488, 0.06558317682236901,
    0.06652275166501441, 0.06746652377336769, 0.06841446651352939, 0.06936655353188872, 0.07032275874824262,
    0.07128305634913933, 0.07224742078143748, 0.07321582674607156, 0.07418824919201603, 0.0751646633104393,
    0.07614504452904086, 0.07712936850656378, 0.07811761112747598, 0.07910974849681388, 0.08010575693518171,
    0.08110561297390134, 0.0821092933503061, 0.08311677500317378, 0.08412803506829362, 0.08514305087416191,
    0.08616179993780225, 0.08718425996070507, 0.08821040882488294, 0.0892402245890371, 0.09027368548483124,
    0.09131076991326914, 0.09235145644117206, 0.09339572379775295, 0.09444355087128366, 0.0954949167058524,
    0.09654980049820824, 0.09760818159468947, 0.0986700394882337, 0.09973535381546611, 0.10080410435386428,
    0.10187627101899599, 0.10295183386182874, 0.10403077306610804, 0.10511306894580208, 0.1061987019426115,
    0.1072876526235414, 0.10837990167853412, 0.10947542991816069, 0.11057421827136911, 0.11167624778328812,
    0.11278149961308417, 0.11388995503187038, 0.11500159542066601, 0.11611640226840439, 0.1172343571699887,
    0.11835544182439339, 0.1194796380328104, 0.12060692769683885, 0.12173729281671646, 0.12287071548959241,
    0.12400717790783951, 0.12514666235740507, 0.1262891512161996, 0.12743462695252142, 0.12858307212351713,
    0.12973446937367675, 0.13088880143336173, 0.13204605111736625, 0.1332062013235099, 0.1343692350312613,
    0.13553513530039177, 0.13670388526965832, 0.13787546815551519, 0.13904986725085267, 0.14022706592376355,
    0.14140704761633532, 0.1425897958434685, 0.14377529419171953, 0.14496352631816778, 0.14615447594930708,
    0.14734812687995957, 0.1485444629722121, 0.14974346815437553, 0.15094512641996388, 0.15214942182669564,
    0.153356338495515, 0.15456586060963273, 0.15577797241358693, 0.1569926582123219, 0.15820990237028656,
    0.1594296893105497, 0.1606520035139339, 0.1618768295181657, 0.16310415191704292, 0.16433395535961864,
    0.1655662245494006, 0.16680094424356645, 0.16803809925219448, 0.16927767443750869, 0.17051965471313896,
    0.17176402504339522, 0.17301077044255553, 0.17425987597416753, 0.17551132675036357, 0.17676510793118866,
    0.17802120472394098, 0.17927960238252477, 0.1805402862068159, 0.18180324154203847, 0.18306845377815364,
    0.18433590834925986, 0.18560559073300353, 0.1868774864500015, 0.1881515810632732, 0.1894278601776842,
    0.19070630943939912, 0.19198691453534517, 0.19326966119268485, 0.19455453517829868, 0.19584152229827717,
    0.197130608397422, 0.19842177935875582, 0.19971502110304143, 0.2010103195883094, 0.20230766080939347,
    0.2036070307974754, 0.20490841561963716, 0.20621180137842082, 0.207517174211397, 0.20882452029074047,
    0.21013382582281326, 0.2114450770477551, 0.21275826023908126, 0.21407336170328692, 0.21539036777945936,
    0.21670926483889574, 0.21803003928472847, 0.2193526775515567, 0.22067716610508417, 0.22200349144176343,
    0.22333164008844625, 0.22466159860203996, 0.22599335356916964, 0.2273268916058462, 0.22866219935714036,
    0.22999926349686178, 0.23133807072724408, 0.23267860777863497, 0.2340208614091917, 0.23536481840458215,
    0.23671046557769007, 0.23805778976832626, 0.23940677784294423, 0.24075741669436063, 0.24210969324148052,
    0.24346359442902737, 0.24481910722727745, 0.2461762186317987, 0.24753491566319438, 0.24889518536685046,
    0.25025701481268764, 0.25162039109491763, 0.2529853013318029, 0.2543517326654217, 0.25571967226143555,
    0.2570891073088615, 0.2584600250198483, 0.2598324126294559, 0.26120625739543885, 0.2625815465980334,
    0.2639582675397478, 0.26533640754515686, 0.266715953960699, 0.26809689415447746, 0.2694792155160647,
    0.27086290545630953, 0.27224795140714814, 0.2736343408214183, 0.2750220611726759, 0.2764110999550155,
    0.2778014446828934, 0.27919308289095346, 0.2805860021338568, 0.28198018998611296, 0.28337563404191524,
    0.28477232191497787, 0.28617024123837664, 0.2875693796643912, 0.2889697248643515, 0.29037126452848544,
    0.29177398636576984, 0.2931778781037837, 0.29458292748856385, 0.29598912228446367, 0.2973964502740132,
    0.2988048992577822, 0.300214457054246, 0.30162511149965254, 0.3030368504478928, 0.30444966177037247,
    0.30586353335588645, 0.3072784531104956, 0.308694408957405, 0.31011138883684464, 0.3115293807059526,
    0.3129483725386594, 0.3143683523255749, 0.3157893080738774, 0.31721122780720373, 0.3186340995655426,
    0.3200579114051284, 0.3214826513983379, 0.32290830763358874, 0.3243348682152387, 0.3257623212634878,
    0.3271906549142822, 0.32861985731921867, 0.3300499166454521, 0.3314808210756036, 0.33291255880767145,
    0.3343451180549421, 0.3357784870459042, 0.3372126540241632, 0.3386476072483591, 0.3400833349920825,
    0.3415198255437962, 0.3429570672067553, 0.34439504829892986, 0.34583375715292936, 0.34727318211592767,
    0.34871331154959007, 0.3501541338300017, 0.3515956373475968, 0.35303781050709027, 0.35448064172740906,
    0.3559241194416267, 0.3573682320968972, 0.35881296815439234, 0.3602583160892379, 0.3617042643904536,
    0.3631508015608915, 0.3645979161171783, 0.36604559658965724, 0.3674938315223311, 0.36894260947280727,
    0.3703919190122435, 0.37184174872529413, 0.3732920872100589, 0.3747429230780315, 0.37619424495404974,
    0.3776460414762467, 0.3790983012960035, 0.3805510130779018, 0.3820041654996785, 0.383457747252181,
    0.38491174703932374, 0.3863661535780449, 0.3878209555982652, 0.3892761418428471, 0.3907317010675545,
    0.3921876220410143, 0.39364389354467794, 0.3951005043727847, 0.39655744333232557, 0.3980146992430074,
    0.399472260937219, 0.4009301172599973, 0.4023882570689944, 0.40384666923444623, 0.40530534263914086,
    0.4067642661783887, 0.40822342875999273, 0.40968281930422024, 0.4111424267437745, 0.4126022400237675,
    0.4140622481016947, 0.41552243994740806, 0.41698280454309206, 0.4184433308832393, 0.41990400797462724,
    0.42136482483629517, 0.4228257704995231, 0.42428683400780953, 0.4257480044168514, 0.4272092707945241,
    0.4286706222208621, 0.43013204778804087, 0.4315935366003582, 0.43305507777421787, 0.43451666043811193,
    0.43597827373260617, 0.437439906810323, 0.43890154883592836, 0.4403631889861163, 0.44182481644959637,
    0.44328642042707994, 0.44474799013126853, 0.4462095147868412, 0.4476709836304443, 0.4491323859106796,
    0.4505937108880959, 0.4520549478351774, 0.45351608603633625, 0.45497711478790376, 0.45643802339812173,
    0.4578988011871362, 0.45935943748698915, 0.4608199216416136, 0.46228024300682635, 0.4637403909503236,
    0.4652003548516755, 0.46666012410232177, 0.46811968810556775, 0.4695790362765814, 0.47103815804238947,
    0.4724970428418756, 0.4739556801257781, 0.4754140593566877, 0.4768721700090476, 0.47833000156915134,
    0.4797875435351438, 0.48124478541702004, 0.48270171673662643, 0.4841583270276619, 0.48561460583567867,
    0.48707054271808425, 0.488526127244144, 0.4899813489949831, 0.4914361975635896, 0.49289066255481795,
    0.4943447335853933, 0.4957984002839143, 0.4972516522908583, 0.4987044792585863, 0.5001568708513485,
    0.5016088167452882, 0.50306030662845, 0.5045113302007849, 0.5059618771741562, 0.5074119372723483,
    0.5088615002310722, 0.5103105557979746, 0.5117590937326444, 0.5132071038066226, 0.5146545758034096,
    0.5161014995184746, 0.5175478647592655, 0.5189936613452173, 0.5204388791077627, 0.5218835078903421,
    0.5233275375484141, 0.524770957949466, 0.5262137589730258, 0.5276559305106719, 0.5290974624660463,
    0.5305383447548655, 0.5319785673049335, 0.5334181200561535, 0.5348569929605411, 0.5362951759822371,
    0.5377326590975208, 0.5391694322948236, 0.5406054855747429, 0.5420408089500556, 0.5434753924457332,
    0.5449092260989554, 0.5463422999591259, 0.5477746040878865, 0.549206128559133, 0.5506368634590304,
    0.5520667988860285, 0.5534959249508784, 0.5549242317766481, 0.556351709498739, 0.5577783482649029,
    0.5592041382352584, 0.560629069582309, 0.5620531324909583, 0.5634763171585295, 0.5648986137947822,
    0.5663200126219308, 0.5677405038746614, 0.5691600778001518, 0.5705787246580886, 0.5719964347206867,
    0.5734131982727078, 0.5748290056114796, 0.5762438470469151, 0.577657712901532, 0.5790705935104724,
    0.5804824792215223, 0.5818933603951318, 0.5833032274044355, 0.5847120706352725, 0.5861198804862068,
    0.5875266473685484, 0.5889323617063738, 0.5903370139365468, 0.5917405945087406, 0.5931430938854579,
    0.5945445025420528, 0.5959448109667532, 0.5973440096606814, 0.5987420891378766, 0.600139039925317,
    0.601534852562942, 0.6029295176036747, 0.604323025613444, 0.6057153671712073, 0.6071065328689739,
    0.6084965133118272, 0.6098852991179481, 0.6112728809186382, 0.6126592493583429, 0.6140443950946753,
    0.6154283087984395, 0.6168109811536535, 0.6181924028575753, 0.619572564620724, 0.6209514571669053,
    0.6223290712332367, 0.6237053975701694, 0.625080426941515, 0.6264541501244686, 0.6278265579096335,
    0.6291976411010471, 0.6305673905162043, 0.6319357969860835, 0.6333028513551711, 0.6346685444814866,
    0.6360328672366086, 0.6373958105056994, 0.6387573651875303, 0.6401175221945083, 0.6414762724527007,
    0.6428336069018611, 0.6441895164954551, 0.6455439922006867, 0.646897024998524, 0.648248605883725,
    0.6495987258648647, 0.6509473759643598, 0.6522945472184969, 0.6536402306774579, 0.654984417405346,
    0.6563270984802136, 0.6576682649940881, 0.6590079080529986, 0.660346018777003, 0.661682588300215,
    0.663017607770831, 0.6643510683511561, 0.6656829612176334, 0.6670132775608686, 0.6683420085856596,
    0.6696691455110213, 0.6709946795702159, 0.6723186020107773, 0.6736409040945408, 0.6749615770976695,
    0.6762806123106823, 0.6775980010384813, 0.6789137346003803, 0.680227804330131, 0.6815402015759522,
    0.6828509177005573, 0.684159944081182, 0.6854672721096124, 0.6867728931922127, 0.6880767987499539,
    0.6893789802184412, 0.6906794290479432, 0.6919781367034186, 0.6932750946645455, 0.6945702944257497,
    0.6958637274962322, 0.6971553853999984, 0.6984452596758862, 0.6997333418775945, 0.7010196235737113,
    0.7023040963477426, 0.7035867517981411, 0.7048675815383341, 0.7061465771967526, 0.7074237304168599,
    0.7086990328571805, 0.7099724761913281, 0.7112440521080349, 0.7125137523111803, 0.7137815685198191,
    0.7150474924682113, 0.7163115159058501, 0.7175736305974911, 0.7188338283231811, 0.7200921008782868,
    0.7213484400735244, 0.7226028377349875, 0.7238552857041769, 0.7251057758380289, 0.7263543000089453,
    0.7276008501048211, 0.7288454180290742, 0.7300879957006748, 0.7313285750541738, 0.732567148039732,
    0.7338037066231491, 0.7350382427858936, 0.7362707485251301, 0.7375012158537505, 0.7387296368004014,
    0.7399560034095143, 0.7411803077413344, 0.742402541871949, 0.7436226978933183, 0.7448407679133024,
    0.7460567440556921, 0.7472706184602376, 0.7484823832826768, 0.7496920306947659, 0.7508995528843073,
    0.7521049420551793, 0.7533081904273653, 0.7545092902369823, 0.755708233736311, 0.7569050131938241,
    0.7580996208942158, 0.7592920491384305, 0.7604822902436931, 0.761670336543536, 0.7628561803878305,
    0.7640398141428143, 0.7652212301911211, 0.7664004209318098, 0.7675773787803932, 0.7687520961688673,
    0.7699245655457403, 0.7710947793760612, 0.7722627301414497, 0.7734284103401249, 0.774591812486933,
    0.775752929113378, 0.77691175276765, 0.7780682760146537, 0.7792224914360376, 0.7803743916302235,
    0.7815239692124345, 0.7826712168147238, 0.7838161270860048, 0.7849586926920777, 0.7860989063156612,
    0.7872367606564179, 0.7883722484309864, 0.7895053623730073, 0.7906360952331536, 0.7917644397791586,
    0.7928903887958445, 0.7940139350851523, 0.7951350714661674, 0.7962537907751522, 0.7973700858655708,
    0.7984839496081209, 0.799595374890759, 0.8007043546187319, 0.8018108817146028, 0.8029149491182808,
    0.8040165497870496, 0.8051156766955944, 0.806212322836032, 0.8073064812179374, 0.8083981448683734,
    0.8094873068319174, 0.8105739601706915, 0.8116580979643884, 0.812739713310301, 0.8138187993233503,
    0.8148953491361127, 0.8159693558988486, 0.8170408127795301, 0.8181097129638689, 0.8191760496553445,
    0.820239816075232, 0.8213010054626285, 0.8223596110744833, 0.8234156261856238, 0.8244690440887835,
    0.8255198580946301, 0.8265680615317925, 0.8276136477468893, 0.8286566101045542, 0.8296969419874665,
    0.8307346367963757, 0.8317696879501308, 0.8328020888857064, 0.8338318330582305, 0.8348589139410117,
    0.8358833250255665, 0.8369050598216458, 0.8379241118572628, 0.8389404746787199, 0.8399541418506348,
    0.8409651069559685, 0.841973363596052, 0.8429789053906127, 0.8439817259778012, 0.8449818190142184,
    0.8459791781749424, 0.8469737971535543, 0.8479656696621656, 0.8489547894314438, 0.8499411502106403,
    0.8509247457676152, 0.8519055698888655, 0.8528836163795487, 0.8538588790635122, 0.8548313517833177,
    0.8558010284002671, 0.85676790279443, 0.8577319688646682, 0.8586932205286628, 0.8596516517229393,
    0.8606072564028947, 0.8615600285428213, 0.8625099621359349, 0.863457051194398, 0.8644012897493476,
    0.8653426718509194, 0.8662811915682735, 0.8672168429896208, 0.8681496202222467, 0.8690795173925383,
    0.8700065286460082, 0.8709306481473206, 0.8718518700803156, 0.8727701886480353, 0.8736855980727481,
    0.8745980925959739, 0.8755076664785089, 0.8764143140004503, 0.8773180294612217, 0.8782188071795967,
    0.8791166414937246, 0.8800115267611542, 0.880903457358859, 0.8817924276832607, 0.8826784321502548,
    0.8835614651952336, 0.884441521273111, 0.8853185948583474, 0.8861926804449723, 0.8870637725466097,
    0.8879318656965008, 0.8887969544475292, 0.889659033372244, 0.890518097062883, 0.8913741401313976,
    0.892227157209476, 0.8930771429485659, 0.8939240920198989, 0.8947679991145137, 0.8956088589432792,
    0.8964466662369179, 0.8972814157460292, 0.8981131022411121, 0.898941720512589, 0.8997672653708273,
    0.9005897316461637, 0.9014091141889267, 0.9022254078694586, 0.9030386075781385, 0.9038487082254058,
    0.9046557047417813, 0.9054595920778903, 0.9062603652044855, 0.9070580191124681, 0.9078525488129109,
    0.9086439493370801, 0.9094322157364578, 0.910217343082763, 0.9109993264679745, 0.9117781610043524,
    0.9125538418244592, 0.9133263640811827, 0.9140957229477567, 0.9148619136177826, 0.9156249313052509,
    0.9163847712445632, 0.9171414286905522, 0.9178948989185035, 0.9186451772241776, 0.9193922589238296,
    0.9201361393542302, 0.9208768138726879, 0.9216142778570686, 0.9223485267058162, 0.9230795558379742,
    0.9238073606932052, 0.9245319367318123, 0.9252532794347589, 0.9259713843036885, 0.9266862468609468,
    0.9273978626495989, 0.9281062272334524, 0.928811336197075, 0.929513185145816, 0.9302117697058248,
    0.9309070855240716, 0.9315991282683667, 0.9322878936273793, 0.9329733773106587, 0.9336555750486515,
    0.9343344825927227, 0.9350100957151737, 0.9356824102092619, 0.9363514218892202, 0.9370171265902744,
    0.9376795201686643, 0.93833859850166, 0.9389943574875829, 0.9396467930458221, 0.9402959011168546,
    0.9409416776622631, 0.941584118664754, 0.9422232201281759, 0.9428589780775383, 0.9434913885590283,
    0.9441204476400297, 0.9447461514091411, 0.9453684959761922, 0.9459874774722635, 0.9466030920497017,
    0.9472153358821392, 0.9478242051645104, 0.948429696113069, 0.9490318049654061, 0.9496305279804665,
    0.9502258614385664, 0.9508178016414093, 0.9514063449121044, 0.9519914875951823, 0.9525732260566117,
    0.9531515566838169, 0.9537264758856935, 0.9542979800926248, 0.9548660657564985, 0.9554307293507228,
    0.9559919673702427, 0.9565497763315555, 0.9571041527727273, 0.9576550932534087, 0.958202594354851,
    0.9587466526799203, 0.9592872648531156, 0.9598244275205814, 0.960358137350126, 0.9608883910312342,
    0.9614151852750845, 0.9619385168145629, 0.9624583824042783, 0.9629747788205779, 0.9634877028615613,
    0.9639971513470955, 0.96450312111883, 0.96500560904021, 0.9655046119964926, 0.9660001268947597,
    0.9664921506639331, 0.9669806802547881, 0.967465712639968, 0.9679472448139976, 0.9684252737932977,
    0.9688997966161977, 0.969370810342951, 0.9698383120557466, 0.9703022988587241, 0.9707627678779863,
    0.9712197162616127, 0.9716731411796727, 0.9721230398242386, 0.9725694094093983, 0.9730122471712688,
    0.9734515503680083, 0.9738873162798297, 0.9743195422090121, 0.9747482254799141, 0.9751733634389861,
    0.975594953454782, 0.9760129929179723, 0.9764274792413555, 0.9768384098598699, 0.9772457822306065,
    0.9776495938328197, 0.978049842167939, 0.9784465247595819, 0.9788396391535638, 0.9792291829179106,
    0.9796151536428684, 0.9799975489409173, 0.9803763664467792, 0.9807516038174314, 0.9811232587321166,
    0.9814913288923531, 0.9818558120219464, 0.9822167058669992, 0.9825740081959214, 0.9829277167994428,
    0.9832778294906196, 0.9836243441048482, 0.9839672584998727, 0.9843065705557962, 0.9846422781750904,
    0.9849743792826052, 0.9853028718255785, 0.9856277537736452, 0.9859490231188478, 0.9862666778756444,
    0.9865807160809192, 0.9868911357939906, 0.9871979350966208, 0.9875011120930248, 0.9878006649098787,
    0.9880965916963292, 0.9883888906240014, 0.9886775598870077, 0.9889625977019567, 0.9892440023079608,
    0.9895217719666445, 0.9897959049621525, 0.9900663996011587, 0.9903332542128724, 0.9905964671490473,
    0.9908560367839888, 0.9911119615145617, 0.9913642397601976, 0.9916128699629021, 0.9918578505872626,
    0.992099180120455, 0.9923368570722507, 0.9925708799750241, 0.9928012473837586, 0.9930279578760548,
    0.993251010052135, 0.993470402534852, 0.9936861339696937, 0.9938982030247909, 0.9941066083909221,
    0.9943113487815208, 0.9945124229326813, 0.9947098296031639, 0.9949035675744012, 0.9950936356505043,
    0.9952800326582673, 0.9954627574471734, 0.9956418088894007, 0.9958171858798266, 0.9959888873360336,
    0.9961569121983139, 0.9963212594296749, 0.9964819280158437, 0.9966389169652714, 0.9967922253091392,
    0.9969418521013613, 0.9970877964185899, 0.9972300573602205, 0.9973686340483939, 0.997503525628003,
    0.9976347312666948, 0.9977622501548747, 0.9978860815057113, 0.9980062245551385, 0.9981226785618607,
    0.9982354428073549, 0.9983445165958748, 0.998449899254454, 0.9985515901329093, 0.9986495886038431,
    0.9987438940626469, 0.9988345059275038, 0.998921423639392, 0.9990046466620859, 0.9990841744821602,
    0.999160006608992, 0.9992321425747616, 0.9993005819344565, 0.9993653242658732, 0.9994263691696179,
    0.9994837162691104, 0.9995373652105833, 0.9995873156630867, 0.9996335673184865, 0.9996761198914691,
    0.9997149731195399, 0.9997501267630265, 0.9997815806050786, 0.9998093344516698, 0.9998333881315978,
    0.9998537414964862, 0.9998703944207844, 0.999883346801768, 0.9998925985595404, 0.9998981496370315,
    0.9999,
])
RADIAL_M_W = np.array([
    1.193124214258847, 1.1931125884425575, 1.1930817305195462, 1.1930359423630683, 1.1929875003298531,
    1.1929348684096155, 1.1928762858392274, 1.1928123478053623, 1.1927449101669523, 1.192672724494665,
    1.192596499654684, 1.1925154812663217, 1.1924311282165088, 1.1923429602426356, 1.192251632508647,
    1.1921563828528614, 1.1920577605528804, 1.191955719956708, 1.1918506469310786, 1.191742501408632,
    1.1916312751739473, 1.1915167521101782, 1.191399278664225, 1.191278811434224, 1.1911554337633086,
    1.1910293107614986, 1.1909001845920506, 1.190768201362194, 1.19063353463388, 1.1904961052996388,
    1.1903556727295512, 1.1902130167008094, 1.1900672921118665, 1.1899189603454685, 1.1897680697088697,
    1.1896144460722944, 1.1894582927613007, 1.1892995046899577, 1.1891381421325495, 1.1889741562672185,
    1.1888077085625484, 1.1886386831299682, 1.1884669923764064, 1.1882928044861298, 1.1881162040770301,
    1.1879369223304301, 1.1877551498380645, 1.1875708284106907, 1.1873841187438279, 1.187194972050614,
    1.1870032751533393, 1.1868089898158165, 1.1866122475481862, 1.1864130934643016, 1.186211455581839,
    1.1860071857965533, 1.1858007311629057, 1.185591692475675, 1.185380133024335, 1.1851662582674973,
    1.1849497318185351, 1.184730786518915, 1.1845093935783046, 1.1842854602245345, 1.1840592199604487,
    1.1838304174189354, 1.1835992041781258, 1.1833654745470792, 1.183129239867522, 1.1828906739692282,
    1.1826495794712963, 1.1824059267575533, 1.1821599009325945, 1.1819112564140322, 1.1816603071553875,
    1.1814068341048598, 1.1811508613050123, 1.1808923825635032, 1.1806314067539085, 1.1803679804862526,
    1.180102070125223, 1.1798336937317189, 1.1795627703276965, 1.1792893474489718, 1.1790133827621307,
    1.1787350152940923, 1.178454103697288, 1.1781705927874362, 1.1778846735847381, 1.1775962226195038,
    1.1773051627035251, 1.1770115995430657, 1.176715517335511, 1.1764168887953912, 1.176115808668182,
    1.1758120583453506, 1.1755057593927833, 1.1751970290272955, 1.1748856722460213, 1.1745717290540831,
    1.1742551945313142, 1.1739361550298342, 1.173614467283584, 1.1732902852659652, 1.172963410378427,
    1.1726340746243755, 1.172302083378363, 1.1719674675602942, 1.1716302490370976, 1.171290436431542,
    1.1709481030435516, 1.1706030257513613, 1.1702553046701774, 1.169905087103228, 1.1695521239450457,
    1.1691965608632078, 1.1688383648647411, 1.1684775221591448, 1.1681140489690909, 1.1677478607664702,
    1.167379080287558, 1.1670075521976921, 1.1666333660559443, 1.166256578591712, 1.165877000148763,
    1.16549479345238, 1.16510990461442, 1.164722298405086, 1.1643319879761032, 1.1639389323029328,
    1.1635432452245695, 1.1631448149868238, 1.1627436251159908, 1.1623397644856062, 1.161933055427951,
    1.161523709239097, 1.161111610581201, 1.1606967678027966, 1.1602791396503163, 1.1598587533139961,
    1.1594356432192006, 1.1590097379673543, 1.1585810361873916, 1.1581496117519836, 1.1577153420502522,
    1.1572783532480955, 1.156838559580737, 1.1563959209639973, 1.1559504370552205, 1.1555022498536291,
    1.1550512032159634, 1.1545973364165076, 1.154140684353169, 1.153681140134955, 1.1532188276499729,
    1.1527536083995413, 1.152285600355112, 1.1518146897273067, 1.151340969547091, 1.1508644013563216,
    1.1503849697473512, 1.1499026407570898, 1.149417422183042, 1.148929380264536, 1.1484384450013663,
    1.1479446404930045, 1.1474479002693045, 1.1469483339407875, 1.1464458151403798, 1.145940394705043,
    1.1454320770356412, 1.1449208469666843, 1.1444066809085935, 1.1438896009951331, 1.1433696432951002,
    1.142846706705948, 1.1423208539724223, 1.1417920021133314, 1.1412602852249747, 1.140725598666424,
    1.1401879553442003, 1.1396473739484396, 1.1391038022040916, 1.1385572657099683, 1.13800775199879,
    1.1374552841881331, 1.1368998054253294, 1.136341384384472, 1.1357799586630863, 1.1352155691856873,
    1.1346481693680301, 1.1340777432803557, 1.1335043336984911, 1.1329279161632289, 1.1323485026859377,
    1.131766073334, 1.1311806161827902, 1.1305921440114504, 1.1300005966216664, 1.1294060711315503,
    1.1288084965464733, 1.1282078990913473, 1.127604259204858, 1.1269975631089453, 1.1263878105846312,
    1.1257750301040421, 1.125159179409819, 1.1245402689904078, 1.1239183080721362, 1.1232932647311675,
    1.122665152346407, 1.122033975855096, 1.121399713527278, 1.1207623694250572, 1.120121944032232,
    1.1194784420318218, 1.1188318489567988, 1.1181821359913924, 1.1175293476970518, 1.1168734456194906,
    1.1162144899773097, 1.115552406611756, 1.1148871946883558, 1.1142188768192498, 1.1135474154281253,
    1.1128728512047605, 1.1121951861450663, 1.1115143924822002, 1.1108304839475325, 1.1101434099663652,
    1.1094532144931586, 1.1087598860157546, 1.108063439349583, 1.1073638448190368, 1.106661093035755,
    1.1059552114396172, 1.1052461676590324, 1.1045339588506755, 1.1038186296812247, 1.1031001260821074,
    1.1023784780752073, 1.1016536390283136, 1.1009256495024695, 1.1001944808626705, 1.099460175618122,
    1.098722694841061, 1.0979820222831955, 1.0972382020132958, 1.0964912046927644, 1.0957409692993152,
    1.0949875959088424, 1.0942310446811017, 1.0934713097495588, 1.0927083899009429, 1.0919422682098137,
    1.0911729404205401, 1.0904004065097939, 1.0896246934725637, 1.0888457860895389, 1.088063680362003,
    1.0872783983178995, 1.0864898784793307, 1.0856981596314115, 1.0849032480083598, 1.0841051252440321,
    1.0833037905852985, 1.0824992329581073, 1.0816914714577264, 1.0808804910334968, 1.08006630088084,
    1.0792489161326884, 1.078428302117783, 1.0776044699573197, 1.076777408578552, 1.0759470971584688,
    1.0751135823267493, 1.0742768600480117, 1.0734369303807998, 1.072593765632754, 1.0717473564753297,
    1.070897723276804, 1.0700448588052225, 1.0691887874258095, 1.0683294863131296, 1.0674669387679803,
    1.0666011681285164, 1.0657321392526926, 1.0648598759379901, 1.0639843803243763, 1.0631056758770119,
    1.0622237425854357, 1.0613385485592859, 1.0604501007462304, 1.0595584384510865, 1.058663537742088,
    1.0577654081809835, 1.0568640435528598, 1.0559594434519597, 1.055051589690353, 1.054140476176843,
    1.0532261386348931, 1.0523085578929607, 1.0513877572112225, 1.0504637274007562, 1.0495364355535701,
    1.0486058995911298, 1.0476721162982885, 1.0467350774552568, 1.0457948149717355, 1.0448513296394701,
    1.0439046050724798, 1.0429546386777009, 1.0420014278438001, 1.0410449496425558, 1.0400852427981022,
    1.0391223019229634, 1.0381561494778762, 1.0371867441050635, 1.0362141091793853, 1.0352382464058372,
    1.0342591016241354, 1.0332767253191593, 1.032291130871391, 1.0313023200612115, 1.0303102629668872,
    1.0293149932735863, 1.0283164836539633, 1.027314714642058, 1.0263096950451778, 1.025301462883622,
    1.0242900204827785, 1.0232753339741418, 1.0222574435520932, 1.0212363329726322, 1.0202119732302521,
    1.0191844003936512, 1.0181535755613318, 1.0171195237901405, 1.0160822502152773, 1.0150417901266346,
    1.0139981172232664, 1.0129512133568812, 1.011901121720529, 1.0108478116267836, 1.009791279063399,
    1.0087315210120322, 1.0076685310315867, 1.0066023305771608, 1.0055329137578881, 1.00446032893446,
    1.0033845476380145, 1.0023055584646876, 1.0012233775682444, 1.0001380129035753, 0.9990494402392172,
    0.9979576640764447, 0.9968627173164878, 0.9957645574606937, 0.9946631850751233, 0.9935586095557978,
    0.9924508638079053, 0.9913399321053318, 0.9902258089080659, 0.9891085512222082, 0.9879880989609633,
    0.9868644659380427, 0.9857376911856569, 0.984607735542359, 0.9834746294874196, 0.9823383316504257,
    0.9811988956972095, 0.980056307476646, 0.9789105192538827, 0.9777616122771144, 0.9766095470460844,
    0.9754543365295346, 0.9742959507668615, 0.9731344427513162, 0.9719698013552105, 0.9708019962994651,
    0.9696310503588097, 0.9684569789528237, 0.9672797814517592, 0.9660994301683963, 0.9649159467353146,
    0.963729389808204, 0.9625396988443682, 0.9613468593859454, 0.9601509523150816, 0.9589519275193303,
    0.9577497976193561, 0.9565445403947553, 0.9553362249139805, 0.9541247952025809, 0.9529102723056957,
    0.9516926607156149, 0.9504719641031958, 0.9492481982749152, 0.9480213436222977, 0.9467914072015164,
    0.9455584138981399, 0.9443223379216761, 0.9430832161614826, 0.941840999951397, 0.9405957602396744,
    0.9393474760817369, 0.9380961044325395, 0.9368417025996476, 0.9355842572376456, 0.9343237855330482,
    0.9330602997622481, 0.9317937255811816, 0.9305241738425576, 0.929251587419341, 0.9279759665360612,
    0.9266973275089232, 0.9254156689252016, 0.924131059000032, 0.922843432417712, 0.9215527548658606,
    0.9202590909028515, 0.9189624442149825, 0.9176628478055529, 0.9163602727843427, 0.9150546606233378,
    0.9137461301785237, 0.9124346209335489, 0.9111201852214911, 0.90980275670589, 0.9084823294043818,
    0.9071590007085968, 0.9058327600671969, 0.9045035715527918, 0.9031714462143238, 0.9018363229065092,
    0.9004983408710986, 0.8991574403014402, 0.8978136291435548, 0.8964669073001809, 0.8951172350475751,
    0.8937646659836771, 0.8924092529754742, 0.8910509214075182, 0.8896897533956073, 0.8883256730829099,
    0.8869586624943977, 0.8855888308681223, 0.8842161568174598, 0.8828406140603003, 0.8814622587787218,
    0.8800810171743367, 0.878696893128336, 0.8773099492806079, 0.8759201999450795, 0.8745276046648605,
    0.8731322607250911, 0.8717340390369097, 0.8703330538084694, 0.8689292059179606, 0.8675225297849064,
    0.8661130955041889, 0.8647009061999864, 0.8632859199640837, 0.8618682249615209, 0.8604476989452805,
    0.8590244546104813, 0.8575984530163316, 0.8561696760040227, 0.8547381118773922, 0.8533038190415269,
    0.8518667750062396, 0.8504270128408078, 0.8489845719870652, 0.8475393995935385, 0.8460915290586744,
    0.8446409888609623, 0.8431877339327312, 0.841731763631641, 0.840273193468854, 0.8388118797626949,
    0.8373479336964761, 0.8358812928251335, 0.8344120511903518, 0.832940088320907, 0.831465532102033,
    0.8299883369522678, 0.8285084431495472, 0.8270259763675096, 0.8255408962068204, 0.8240531621459906,
    0.822562864920886, 0.821070008937185, 0.8195745140911271, 0.8180764540083747, 0.8165758418645983,
    0.8150726647212085, 0.8135668646823547, 0.8120586069697691, 0.8105477440836903, 0.8090343512458305,
    0.8075184300250895, 0.8060000128078821, 0.8044789912856616, 0.8029553404344496, 0.8014292642257452,
    0.7999006640184362, 0.7983696107482732, 0.7968359859970158, 0.7952999612244743, 0.7937614908205113,
    0.7922205178614783, 0.7906770763384069, 0.7891312070295301, 0.7875829534220724, 0.7860321961302732,
    0.7844790380238729, 0.7829234852845217, 0.7813655416815664, 0.779805204851648, 0.7782424003455264,
    0.7766772963410542, 0.7751097889701701, 0.7735399856364418, 0.771967745300544, 0.7703931726115694,
    0.7688162928560938, 0.76723706133258, 0.7656555776861005, 0.7640716641039648, 0.7624854537268426,
    0.7608969863409889, 0.7593062491240821, 0.7577132497672805, 0.7561179537820486, 0.7545203072545615,
    0.7529204434868888, 0.7513183788017694, 0.7497140912319726, 0.7481075586612995, 0.7464988183271644,
    0.7448877998270965, 0.7432745029911172, 0.7416591198527118, 0.7400414998195342, 0.7384217700891295,
    0.7367998715742097, 0.7351757877528234, 0.7335495795377296, 0.7319211914623762, 0.7302906092128507,
    0.7286579251976515, 0.7270230681512218, 0.7253861538967983, 0.7237471891073555, 0.7221060679015036,
    0.7204629370221491, 0.7188177204377546, 0.7171704025940866, 0.7155210756719876, 0.7138697328937884,
    0.712216260876769, 0.7105608896160168, 0.7089033904092992, 0.7072439448200716, 0.7055824697972801,
    0.7039189661927099, 0.7022534994016785, 0.700586094339947, 0.6989166732567096, 0.6972453786330355,
    0.6955721233632309, 0.6938969377038519, 0.692219791966135, 0.690540793260894, 0.6888598715804991,
    0.6871770760009971, 0.6854923556340774, 0.6838058559245215, 0.68211737893454, 0.6804271140822866,
    0.6787350252261963, 0.6770410773120629, 0.6753452444435162, 0.6736476765983846, 0.6719482989617275,
    0.6702470782595886, 0.6685440810534351, 0.6668393486531593, 0.6651328887884117, 0.6634245526179506,
    0.6617145823641986, 0.6600028580863305, 0.6582894435524396, 0.6565742140247022, 0.6548573613998769,
    0.6531388608687001, 0.6514186872303066, 0.6496967661873583, 0.6479732188137667, 0.6462480043949921,
    0.6445212327611398, 0.6427928469182703, 0.6410627622299501, 0.6393310959598045, 0.6375977940532515,
    0.6358630442891974, 0.6341266616717467, 0.6323887346441247, 0.6306492611130143, 0.6289081144947262,
    0.6271655608863608, 0.6254214329598354, 0.6236759044388891, 0.6219288112008704, 0.6201802804581564,
    0.6184303243680142, 0.6166787822852078, 0.6149258209840018, 0.6131713874414629, 0.6114155660156505,
    0.6096583462258441, 0.6078996907745252, 0.6061397115841772, 0.6043783111409405, 0.6026155975058507,
    0.6008515279974114, 0.5990860649274109, 0.5973192813079619, 0.5955512507109755, 0.5937817858776642,
    0.5920110904917218, 0.5902390886781569, 0.5884657533272957, 0.5866912730014493, 0.5849154418218327,
    0.5831384167433069, 0.5813601598740872, 0.5795807366235317, 0.5778000374067385, 0.5760182482290181,
    0.5742352026747609, 0.5724510184531324, 0.5706656908275727, 0.5688791985040476, 0.5670915159894695,
    0.5653028165523315, 0.5635130403307117, 0.5617220246129127, 0.5599299910978317, 0.5581369430381364,
    0.5563427644520857, 0.55454754772418, 0.552751368203731, 0.5509541594875389, 0.5491558887699446,
    0.5473566497092581, 0.5455564831219148, 0.54375537142322, 0.5419532263541871, 0.5401501510019378,
    0.5383462168592754, 0.5365413216026678, 0.5347355386231989, 0.5329288393268627, 0.5311212295807131,
    0.5293128418025569, 0.5275036203536064, 0.5256936127338966, 0.5238826673396104, 0.522070840852046,
    0.5202582040933613, 0.5184449361453991, 0.5166308004358691, 0.5148159957890204, 0.51300044333684,
    0.5111841303380716, 0.5093671241944868, 0.5075492593004176, 0.5057308566027139, 0.5039117444971712,
    0.5020919683866208, 0.5002715816669489, 0.49845053665976624, 0.4966289406271449, 0.4948066769592354,
    0.4929838567007563, 0.49116045830434846, 0.48933645269740156, 0.4875119311760815, 0.485686779785251,
    0.48386120228130813, 0.48203510960629325, 0.4802084394681863, 0.47838139202680385, 0.47655380343580733,
    0.4747257777538413, 0.4728974253417516, 0.4710684935093551, 0.46923925994260884, 0.46740962432830135,
    0.46557951344485193, 0.4637491627518635, 0.4619184641712305, 0.46008736506662745, 0.4582559539090786,
    0.4564242840991062, 0.4545921929655242, 0.45275993120833213, 0.45092743052218787, 0.44909467905919176,
    0.4472615818780381, 0.44542836835633715, 0.44359503313605975, 0.4417614550714594, 0.4399276629001255,
    0.43809371274861, 0.43625968398172454, 0.43442550140706265, 0.4325911765940452, 0.4307566791563488,
    0.4289222583557294, 0.4270877410908197, 0.42525322925513276, 0.4234185511914522, 0.4215838839019084,
    0.4197491510429044, 0.4179145921700571, 0.4160800218685855, 0.4142455712562365, 0.41241110265129,
    0.4105767782591544, 0.40874237519969703, 0.4069082131233892, 0.40507417333947393, 0.40324025717810563,
    0.40140654050211044, 0.3995729876751519, 0.39773966801321947, 0.3959064796833982, 0.39407359275456955,
    0.39224080133875394, 0.3904084153869263, 0.3885761674146936, 0.38674425028653703, 0.3849127092434146,
    0.38308136354725, 0.3812504994020324, 0.3794199769151073, 0.37758981142498566, 0.37576013594161484,
    0.3739307551793668, 0.3721018828324133, 0.37027352217733056, 0.36844540348383525, 0.36661791146702577,
    0.364790895985589, 0.36296428610457643, 0.36113834296471425, 0.35931284997941476, 0.3574879160672356,
    0.35566369863222913, 0.3538400302077649, 0.3520168826921326, 0.3501944330945699, 0.348372809310347,
    0.3465516894127678, 0.3447312297304219, 0.34291159811584027, 0.3410926894892885, 0.33927452024521293,
    0.3374569491841728, 0.33564030048630145, 0.3338245144738002, 0.3320095156153443, 0.3301952768864223,
    0.3283818089661257, 0.3265693758814001, 0.3247577848536324, 0.3229472140950595, 0.3211375172722789,
    0.31932891159248306, 0.31752101131587396, 0.31571419926323807, 0.3139083873574268, 0.3121037184297587,
    0.310299937929293, 0.3084974093058597, 0.30669584702126895, 0.3048954676108954, 0.3030961151040297,
    0.30129800782077626, 0.29950091917786587, 0.2977051004796219, 0.2959105086893411, 0.29411719699643013,
    0.29232510740190115, 0.29053428990153396, 0.2887448728079271, 0.2869566040696124, 0.2851697672554526,
    0.28338421672899594, 0.28160005719137343, 0.27981725346412367, 0.27803582239730396, 0.2762559391777697,
    0.27447743693671667, 0.2727004826001104, 0.27092509819273763, 0.26915108776479346, 0.26737872466098306,
    0.26560794444591784, 0.2638386587203404, 0.26207113489288125, 0.2603051556721655, 0.2585406228995176,
    0.2567773635892693, 0.2550158727129578, 0.2532562618771586, 0.2514981830433466, 0.249741892433335,
    0.24798759287788788, 0.24623502192717892, 0.24448439679402348, 0.242735449489967, 0.24098846509597704,
    0.23924347324117537, 0.23750035571480388, 0.2357593253198889, 0.2340201759036905, 0.23228301078363367,
    0.23054791171023256, 0.22881486376033267, 0.2270840689697701, 0.22535528542079092, 0.22362878413925014,
    0.2219042219883322, 0.22018194925145773, 0.2184617674091947, 0.21674390069025923, 0.21502833083345474,
    0.2133149905171833, 0.2116040775700237, 0.20989545820735123, 0.20818935199465566, 0.20648547482469354,
    0.2047840330754538, 0.20308502731869355, 0.20138853307908372, 0.1996945984391029, 0.19800296403102974,
    0.19631419193107816, 0.19462782490766775, 0.19294414962901257, 0.1912631095333176, 0.18958473776136991,
    0.1879091826439968, 0.18623610686625947, 0.18456599646660063, 0.18289870831249833, 0.18123400473916698,
    0.1795723189286028, 0.17791349506692225, 0.17625748630895566, 0.1746045212289794, 0.17295457498141537,
    0.1713074432358132, 0.16966343569412298, 0.16802257492204378, 0.16638483148862304, 0.1647500438511434,
    0.16311840140967915, 0.161490074008898, 0.15986514496646528, 0.15824329079743252, 0.15662453774201243,
    0.1550092871286864, 0.1533973390335283, 0.15178896843797568, 0.15018404203446267, 0.1485824155241816,
    0.14698429450152012, 0.14538973752286483, 0.14379868459581993, 0.14221137395367908, 0.140626814033881,
    0.13904597001759364, 0.1374689044206321, 0.13589543196735232, 0.13432596717524042, 0.1327602256751383,
    0.13119852154123446, 0.1296407119916326, 0.12808692137667674, 0.1265372362680036, 0.12499146546938096,
    0.12344995390545538, 0.12191242382354424, 0.12037927071885175, 0.11885015139459026, 0.11732552070350175,
    0.1158051287083237, 0.11428910588901298, 0.1127774917071134, 0.1112702922405219, 0.10976774864570571,
    0.10826951274787053, 0.10677621790604905, 0.10528739666758366, 0.10380315931930031, 0.10232390247766471,
    0.10084917384133388, 0.09937946080177729, 0.09791492440654945, 0.09645517898506561, 0.09500018805662429,
    0.09355004054486674, 0.09210437353658163, 0.09066376254000089, 0.08922856305002042, 0.0877987085736162,
    0.08637430314837673, 0.08495525398711541, 0.08354172964199363, 0.08213405991733519, 0.08073188473954565,
    0.07933544662885741, 0.0779447108586743, 0.07656003866351449, 0.07518123860414258, 0.07380839149947929,
    0.07244169453058093, 0.07108110778652156, 0.06972668940730165, 0.06837839215187916, 0.06703530685344676,
    0.06569866427721141, 0.06436856754419326, 0.06304532580212478, 0.06172903539276275, 0.060419467399452295,
    0.05911679136579772, 0.057821451322201116, 0.05653303448874219, 0.055252170851297105, 0.05397846107282037,
    0.05271140718902628, 0.051451349140037364, 0.050198522713506014, 0.04895408438714595, 0.0477174800960105,
    0.04648911221103934, 0.04526900344975708, 0.04405719356753972, 0.04285409252507614, 0.04165743137146958,
    0.04046986019966483, 0.039291687702870934, 0.038122257956305215, 0.03696289959142609, 0.03581254894857221,
    0.03467040662307935, 0.03353781155431017, 0.03241552419627733, 0.03130434120329575, 0.03020295801694109,
    0.029110776974540654, 0.02802975145658619, 0.026960564983418693, 0.025902526565111827, 0.024854521419877824,
    0.02381967471927951, 0.02279698632912465, 0.021785611119676883, 0.02078814898606155, 0.019803273083826026,
    0.018831976329989793, 0.01787501195983453, 0.01693242257480289, 0.016004758616263298, 0.015093491815396484,
    0.014197547575156141, 0.01331893488238765, 0.012458242821850478, 0.011616471743155618, 0.010794064313615726,
    0.009992332931213783, 0.009212471951828758, 0.008456692548078851, 0.007725460567642867, 0.007021999226359498,
    0.0063477887189264314, 0.005706210555132168, 0.005100889909176305, 0.004535659126414719, 0.0040157584134838074,
    0.0035476797504384906, 0.0031383919077608855, 0.0027978435630702436, 0.002536940175688715, 0.0023683742718719446,
    0.0023079087422747365,
])
RADIAL_M_P = np.array([
    1.9088664080806295, 1.520257612876034, 1.4237867499505392, 1.3670279490122084, 1.3266823103103318,
    1.2953588992616225, 1.2697509529922861, 1.248090538527579, 1.2293209928201065, 1.2127601548218974,
    1.1979419500910522, 1.1845337940986187, 1.1722900442470245, 1.161024119996682, 1.1505909601050084,
    1.140875547842809, 1.1317851461874642, 1.1232438983059536, 1.115188963830698, 1.1075677021643406,
    1.1003355750842103, 1.0934545632294386, 1.0868919555126197, 1.0806194063009773, 1.0746121900284937,
    1.0688486114307754, 1.0633095276454594, 1.057977962684193, 1.052838794943514, 1.047878495461409,
    1.0430849094088432, 1.0384470808502975, 1.033955097049343, 1.0295999583040858, 1.0253734736616058,
    1.021268163849192, 1.0172771818516169, 1.0133942439495716, 1.0096135689455594, 1.0059298262075718,
    1.0023380904954755, 0.998833801621432, 0.9954127281857779, 0.9920709378255981, 0.9888047704245445,
    0.9856108118786692, 0.9824858728845278, 0.9794269704119358, 0.9764313102205925, 0.9734962713237125,
    0.9706193909923541, 0.967798352255693, 0.9650309734337609, 0.9623151981153264, 0.9596490851068663,
    0.9570307993358954, 0.9544586058892193, 0.9519308621195369, 0.949446010022109, 0.9470025723130516,
    0.9445991457882229, 0.9422343965071877, 0.9399070561923765, 0.937615917083664, 0.9353598288746963,
    0.9331376946922559, 0.9309484676065297, 0.9287911480343763, 0.926664780556274, 0.9245684520790918,
    0.9225012888537591, 0.9204624537173725, 0.9184511450200278, 0.9164665941222406, 0.9145080639188841,
    0.9125748472103472, 0.910666264417357, 0.9087816626440843, 0.9069204142650924, 0.905081915760779,
    0.9032655864065677, 0.9014708670752287, 0.8996972190698356, 0.8979441231985019, 0.8962110789245255,
    0.8944976036826722, 0.8928032318252035, 0.8911275134260002, 0.8894700142611238, 0.8878303149569109,
    0.8862080097733935, 0.8846027064685071, 0.8830140258318828, 0.8814416008556669, 0.8798850764312747,
    0.8783441084701842, 0.8768183634941693, 0.8753075188407886, 0.8738112616172062, 0.872329288157514,
    0.8708613040061357, 0.8694070236373892, 0.8679661698494503, 0.8665384735626576, 0.8651236734050844,
    0.8637215155574263, 0.862331753472994, 0.8609541472516153, 0.8595884637685034, 0.8582344763861025,
    0.8568919648054518, 0.8555607144425879, 0.85424051626828, 0.8529311672294024, 0.8516324694594173,
    0.8503442300944544, 0.8490662614520785, 0.8477983805954448, 0.8465404092505799, 0.8452921735357315,
    0.844053503983007, 0.8428242352800579, 0.8416042060815632, 0.8403932592079468, 0.8391912410809024,
    0.8379980017694226, 0.8368133950789673, 0.8356372781354704, 0.8344695113809568, 0.8333099584613444,
    0.8321584862761673, 0.8310149647749954, 0.8298792666747978, 0.8287512676661672, 0.8276308460921824,
    0.8265178830445223, 0.8254122623703399, 0.8243138703057808, 0.8232225955095276, 0.8221383290188884,
    0.8210609642862254, 0.819990396974511, 0.8189265248456228, 0.8178692478986229, 0.8168184681433899,
    0.8157740896152836, 0.814736018368232, 0.8137041621988539, 0.81267843071127, 0.8116587355075613,
    0.8106449899309116, 0.8096371088859735, 0.8086350090437009, 0.8076386086072036, 0.8066478273854372,
    0.8056625867109359, 0.804682809393372, 0.8037084197122233, 0.8027393433484837, 0.8017755074426138,
    0.8008168404238212, 0.7998632719829912, 0.7989147330695419, 0.797971155982548, 0.7970324742433066,
    0.796098622514698, 0.7951695365772662, 0.794245153404642, 0.7933254110633978, 0.7924102486174938,
    0.7914996062583866, 0.7905934252012043, 0.7896916476279212, 0.788794216708061, 0.787901076644935,
    0.7870121725097468, 0.7861274502522066, 0.7852468567007043, 0.7843703396238639, 0.7834978476846599,
    0.7826293302839433, 0.7817647376820183, 0.780904020906664, 0.7800471317438049, 0.7791940227647913,
    0.778344647306626, 0.7774989594063588, 0.7766569138359027, 0.7758184660799803, 0.7749835722908875,
    0.7741521892911045, 0.77332427449772, 0.772499786005673, 0.7716786825644211, 0.7708609235316071,
    0.770046468865077, 0.7692352790850583, 0.7684273152969274, 0.7676225391283136, 0.7668209128067778,
    0.7660223991362769, 0.7652269614121026, 0.764434563463924, 0.7636451696038025, 0.7628587446362791,
    0.7620752538918938, 0.7612946631738502, 0.760516938730385, 0.7597420472981138, 0.7589699560496133,
    0.7582006325890651, 0.7574340449808297, 0.7566701617054479, 0.7559089516507089, 0.7551503841258635,
    0.7543944288542517, 0.7536410559506448, 0.752890235880693, 0.7521419395122475, 0.7513961380983136,
    0.7506528032854052, 0.7499119070712996, 0.749173421739207, 0.7484373167965515, 0.7477035684401772,
    0.7469721499993036, 0.7462430351775917, 0.7455161979809224, 0.7447916127228205, 0.7440692539972482,
    0.7433490967017409, 0.7426311160692936, 0.7419152876348494, 0.7412015872129323, 0.7404899908696572,
    0.7397804749716168, 0.7390730161593599, 0.7383675913140686, 0.7376641776248738, 0.7369627525364082,
    0.7362632937303741, 0.7355657791284165, 0.7348701868972896, 0.7341764954614269, 0.7334846835001483,
    0.7327947299342108, 0.7321066138677879, 0.7314203146606038, 0.7307358119120946, 0.730053085361906,
    0.729372115003841, 0.7286928811014999, 0.7280153640883091, 0.7273395445991524, 0.7266654034570299,
    0.7259929216670007, 0.7253220804281202, 0.7246528611580587, 0.7239852454762385, 0.723319215172936,
    0.7226547522393565, 0.7219918388136788, 0.7213304571928874, 0.7206705898899355, 0.7200122195801999,
    0.7193553290925223, 0.7186999014129822, 0.7180459196995763, 0.7173933672760868, 0.7167422276207034,
    0.7160924843898016, 0.7154441213771543, 0.7147971225079441, 0.7141514718569848, 0.7135071536186317,
    0.712864152154369, 0.7122224520049636, 0.7115820378477624, 0.710942894474148, 0.7103050067793513,
    0.7096683598016638, 0.709032938722099, 0.7083987288655789, 0.7077657156855521, 0.7071338847268869,
    0.7065032216633178, 0.7058737122798635, 0.705245342471214, 0.7046180982715597, 0.7039919658522837,
    0.7033669315013407, 0.7027429815746504, 0.7021201025172106, 0.7014982809214121, 0.7008775034992321,
    0.7002577570553945, 0.6996390285006586, 0.6990213048417815, 0.6984045731699078, 0.6977888206542522,
    0.6971740345856194, 0.6965602023639088, 0.6959473114860641, 0.6953353495529246, 0.6947243042209625,
    0.6941141632234236, 0.6935049143936305, 0.6928965456418226, 0.6922890449828594, 0.6916824005422821,
    0.6910766005149114, 0.6904716331607299, 0.6898674868149899, 0.6892641498701579, 0.6886616108087058,
    0.688059858216312, 0.687458880767108, 0.6868586671928862, 0.6862592062826005, 0.6856604869166045,
    0.6850624980018258, 0.6844652285105985, 0.6838686675349201, 0.6832728042453073, 0.6826776278542295,
    0.6820831276410864, 0.6814892929532856, 0.6808961131617135, 0.6803035776892152, 0.6797116760564441,
    0.679120397875496, 0.67852973279025, 0.6779396705061869, 0.677350200803778, 0.6767613134811419,
    0.6761729983956279, 0.6755852454548434, 0.6749980446066968, 0.67441138587426, 0.6738252593630987,
    0.6732396552348292, 0.6726545636628145, 0.6720699748876431, 0.6714858792060905, 0.6709022669319284,
    0.6703191284174959, 0.6697364540508641, 0.6691542342747969, 0.6685724595863529, 0.6679911205578106,
    0.6674102078175792, 0.6668297120009743, 0.6662496237855209, 0.6656699339058199, 0.6650906331200732,
    0.6645117122064852, 0.663933162008699, 0.6633549733970179, 0.6627771372414519, 0.6621996444529255,
    0.6616224860086843, 0.6610456529312485, 0.6604691362565651, 0.6598929270921072, 0.6593170165720517,
    0.658741395821584, 0.6581660560363733, 0.657590988439025, 0.657016184271445, 0.6564416347923436,
    0.6558673312953041, 0.655293265130156, 0.6547194276201724, 0.6541458101386335, 0.653572404114861,
    0.6529992009782419, 0.6524261921652574, 0.6518533691512767, 0.6512807234652103, 0.6507082466213128,
    0.6501359301460081, 0.6495637656143549, 0.6489917446304463, 0.6484198587917411, 0.6478480997064966,
    0.6472764590634021, 0.6467049285641719, 0.6461334998633768, 0.6455621646829528, 0.6449909147826096,
    0.6444197419036197, 0.6438486377908741, 0.6432775942383908, 0.6427066030611832, 0.6421356560554574,
    0.6415647450473876, 0.6409938618783577, 0.6404229984136645, 0.6398521465228713, 0.6392812980720439,
    0.6387104449596612, 0.6381395790891051, 0.63756869237798, 0.6369977767386843, 0.6364268241059177,
    0.6358558264589504, 0.6352847757271765, 0.6347136638539883, 0.6341424828207298, 0.6335712246131211,
    0.6329998812419, 0.6324284446664641, 0.6318569068759594, 0.6312852599029835, 0.6307134957313747,
    0.6301416063565042, 0.6295695837833895, 0.6289974200694897, 0.6284251072709832, 0.6278526373566491,
    0.6272800023155249, 0.6267071941881905, 0.6261342050400955, 0.6255610269337715, 0.6249876518514172,
    0.6244140718183067, 0.6238402789006121, 0.6232662651492056, 0.6226920225940022, 0.6221175431941564,
    0.6215428189756964, 0.6209678420273961, 0.6203926043876042, 0.6198170980618387, 0.6192413150005585,
    0.6186652472076883, 0.6180888867413168, 0.6175122256016143, 0.6169352557809877, 0.6163579692227013,
    0.615780357866222, 0.6152024137261634, 0.6146241287819387, 0.6140454950024723, 0.6134665043443432,
    0.612887148664935, 0.6123074198815024, 0.6117273099679614, 0.6111468108373119, 0.6105659144082654,
    0.6099846125632811, 0.6094028971024226, 0.6088207598614874, 0.6082381927208662, 0.6076551875150682,
    0.6070717361049762, 0.6064878302993253, 0.6059034618692349, 0.6053186225735037, 0.6047333040878835,
    0.6041474981537935, 0.6035611965505634, 0.6029743909957883, 0.6023870732203456, 0.6017992348960663,
    0.6012108676572487, 0.6006219631741538, 0.600032513035681, 0.5994425087727671, 0.5988519419265494,
    0.5982608040381616, 0.597669086625598, 0.5970767812392128, 0.5964838793835017, 0.5958903725110398,
    0.5952962520957086, 0.5947015095607522, 0.5941061362514393, 0.5935101235814357, 0.5929134629010926,
    0.5923161454931718, 0.5917181626463504, 0.5911195056395071, 0.5905201656869841, 0.5899201339697151,
    0.5893194017038021, 0.5887179599655388, 0.5881157998502962, 0.5875129124900527, 0.5869092888973906,
    0.5863049200877881, 0.585699797121501, 0.5850939109419222, 0.5844872524401505, 0.5838798125426268,
    0.5832715821286945, 0.5826625519618192, 0.5820527128593183, 0.5814420556057236, 0.5808305708662744,
    0.5802182493289072, 0.5796050816629388, 0.5789910584116356, 0.5783761699350198, 0.5777604067126489,
    0.5771437592718107, 0.576526218058091, 0.5759077734141389, 0.5752884156782703, 0.5746681352553682,
    0.5740469223912597, 0.5734247672500001, 0.5728016600100236, 0.5721775908736313, 0.5715525499061238,
    0.5709265270944142, 0.5702995124719943, 0.5696714960192613, 0.5690424676540289, 0.5684124171508609,
    0.5677813343138169, 0.567149208945567, 0.5665160307858086, 0.5658817894711314, 0.5652464745317254,
    0.5646100755615642, 0.5639725820639399, 0.5633339835281483, 0.5626942692891204, 0.5620534285616718,
    0.5614114506669388, 0.5607683248797564, 0.5601240403941483, 0.5594785862990128, 0.558831951511015,
    0.5581841249520598, 0.5575350956240035, 0.5568848524428178, 0.5562333841959479, 0.555580679604778,
    0.5549267272707987, 0.5542715156335161, 0.5536150332556866, 0.5529572686586288, 0.5522982102517471,
    0.5516378464309735, 0.5509761654197158, 0.5503131554000866, 0.5496488044683416, 0.5489831005497112,
    0.5483160315625222, 0.5476475853531519, 0.5469777497225343, 0.546306512513475, 0.5456338613582514,
    0.5449597838370377, 0.5442842675102655, 0.5436072997318793, 0.5429288678413438, 0.5422489591732345,
    0.5415675608172799, 0.5408846598935171, 0.5402002434149367, 0.5395142982313672, 0.5388268111977439,
    0.5381377689603819, 0.5374471581311615, 0.536754965315805, 0.5360611769414385, 0.5353657793971267,
    0.5346687590207675, 0.533970101962858, 0.5332697942533557, 0.5325678218951073, 0.5318641708129641,
    0.5311588267819036, 0.5304517754478737, 0.5297430024474257, 0.5290324932215753, 0.5283202345858813,
    0.5276062104104506, 0.5268904058333104, 0.5261728057791517, 0.5254533951932139, 0.5247321589792493,
    0.5240090817623304, 0.523284148067932, 0.5225573424180125, 0.5218286492544904, 0.5210980526880682,
    0.5203655368027373, 0.5196310856943305, 0.518894683233379, 0.5181563130550593, 0.5174159587279847,
    0.5166736038888424, 0.5159292319494941, 0.5151828260258031, 0.5144343691333435, 0.5136838442325284,
    0.5129312342128898, 0.5121765218698817, 0.5114196896320538, 0.5106607197994495, 0.5098995945850926,
    0.5091362962143589, 0.5083708067394863, 0.5076031078949175, 0.506833181355032, 0.5060610084229087,
    0.505286570413809, 0.5045098485968569, 0.503730824059845, 0.5029494777111423, 0.5021657902083299,
    0.5013797422168906, 0.5005913139801759, 0.4998004855447835, 0.49900723692049187, 0.49821154795555667,
    0.4974133983996607, 0.4966127677160683, 0.495809635266242, 0.49500398021533765, 0.494195781523578,
    0.49338501802931845, 0.49257166821767795, 0.4917557103981487, 0.4909371228801078, 0.49011588355626956,
    0.48929197010550984, 0.48846536017039166, 0.4876360309813761, 0.48680395978375435, 0.48596912354425426,
    0.4851314988944926, 0.4842910624055179, 0.48344779043488284, 0.48260165900232543, 0.48175264398931383,
    0.48090072104033177, 0.48004586544247263, 0.47918805239860407, 0.47832725678589494, 0.47746345311395344,
    0.4765966158612511, 0.47572671941574773, 0.4748537374763562, 0.4739776435438723, 0.4730984112178154,
    0.47221601358874277, 0.4713304233913562, 0.4704416133499516, 0.4695495558873928, 0.46865422291928427,
    0.46775558614392354, 0.466853617178544, 0.4659482873495373, 0.46503956744173314, 0.4641274279197163,
    0.4632118392316096, 0.4622927714123348, 0.46137019408038493, 0.46044407657544295, 0.4595143878208794,
    0.45858109663828195, 0.45764417162466153, 0.4567035809789053, 0.45575929229892287, 0.4548112725886808,
    0.45385948870539883, 0.4529039076148993, 0.451944495754687, 0.45098121906667643, 0.45001404332172257,
    0.449042933667839, 0.4480678549323611, 0.4470887712858269, 0.44610564678323694, 0.4451184453512793,
    0.44412713018103167, 0.44313166421354455, 0.44213200992889545, 0.4411281294608371, 0.44011998443460887,
    0.4391075359674377, 0.43809074487875876, 0.43706957136136704, 0.43604397523416605, 0.43501391573600734,
    0.4339793517839672, 0.43294024202895853, 0.4318965442117073, 0.43084821584734634, 0.42979521397500653,
    0.4287374949141558, 0.4276750149331594, 0.4266077293579462, 0.42553559297629295, 0.4244585604158013,
    0.42337658524529087, 0.4222896208210629, 0.42119762019619067, 0.42010053536153347, 0.41899831774260576,
    0.4178909184741342, 0.41677828772157954, 0.41566037519787336, 0.41453713041545814, 0.41340850196470313,
    0.41227443741855185, 0.41113488398900655, 0.40998978877861236, 0.4088390977857399, 0.4076827559773708,
    0.40652070778082217, 0.4053528972260172, 0.40417926755491296, 0.4029997610050893, 0.4018143189218506,
    0.4006228824635478, 0.39942539216883954, 0.39822178749570725, 0.39701200679910165, 0.39579598754468814,
    0.39457366659187487, 0.3933449803902427, 0.39210986462468855, 0.3908682538529067, 0.3896200816345565,
    0.3883652806169604, 0.38710378222942854, 0.38583551719253295, 0.3845604158609828, 0.3832784071337323,
    0.38198941909425876, 0.3806933788681235, 0.3793902125840276, 0.3780798451171543, 0.3767622004280411,
    0.3754372011649323, 0.37410476915490576, 0.3727648251586604, 0.37141728841722355, 0.3700620777985857,
    0.3686991103744821, 0.36732830230997093, 0.3659495690066379, 0.36456282403132456, 0.3631679801564496,
    0.36176494850283136, 0.36035363883295357, 0.35893396033638725, 0.35750581962512085, 0.3560691222642294,
    0.3546237732583497, 0.3531696751098541, 0.35170672952946647, 0.35023483679190526, 0.34875389504047183,
    0.34726380190193096, 0.34576445324712024, 0.3442557423060555, 0.3427375611829995, 0.34120980157376346,
    0.3396723524259604, 0.3381251000005394, 0.3365679301562843, 0.3350007270957409, 0.3334233725894107,
    0.3318357457264569, 0.33023772440104415, 0.32862918571482846, 0.3270100039257584, 0.32538005053685026,
    0.3237391946751822, 0.32208730459586965, 0.32042424658595015, 0.3187498844657577, 0.3170640797782569,
    0.31536669196631806, 0.31365757695888474, 0.3119365880323317, 0.3102035774648222, 0.3084583951487163,
    0.30670088753819824, 0.3049308988954471, 0.3031482710468021, 0.30135284243996785, 0.29954444885000964,
    0.2977229233447187, 0.29588809576035024, 0.29403979284773674, 0.292177839399705, 0.2903020569185446,
    0.28841226342929027, 0.2865082733713824, 0.2845898988019122, 0.2826569472292466, 0.28070922259662745,
    0.2787465259496169, 0.27676865408651175, 0.27477540025323743, 0.27276655340427625, 0.2707418996970543,
    0.2687012210241386, 0.2666442948493757, 0.2645708955866992, 0.26248079162291726, 0.26037374718992856,
    0.258249523348, 0.25610787490140874, 0.2539485530401526, 0.2517713041458014, 0.24957586645739416,
    0.2473619701458074, 0.2451293424197465, 0.242877710133665, 0.2406067920551116, 0.23831629996590897,
    0.23600594373561656, 0.23367542631239702, 0.23132444367371496, 0.22895268452255335, 0.22655983078494124,
    0.22414556049734635, 0.2217095435287353, 0.2192514432946593, 0.21677091561040762, 0.2142676072701588,
    0.2117411589777305, 0.2091912038717456, 0.2066173687390105, 0.20401927117420615, 0.20139652014915388,
    0.1987487144670832, 0.19607544345444738, 0.1933762884508612, 0.19065082103752728, 0.18789860508122924,
    0.1851191926925615, 0.18231212676259578, 0.1794769397808964, 0.1766131538708473, 0.17372027829144088,
    0.17079780883231144, 0.16784523152601571, 0.16486202047174792, 0.16184763820872594, 0.15880153010759734,
    0.1557231319660788, 0.15261186653128722, 0.14946713863761651, 0.14628834120384582, 0.14307485061597203,
    0.139826029748924, 0.13654122090774812, 0.13321975124329422, 0.12986093585879344, 0.12646406385734954,
    0.12302840837485118, 0.11955322769172994, 0.11603775523328208, 0.11248120644700732, 0.1088827787214548,
    0.1052416415438957, 0.1015569426644729, 0.09782781241776006, 0.09405335560952066, 0.09023264616937632,
    0.08636473104467468, 0.0824486372883062, 0.07848336902712538, 0.07446789412144095, 0.0704011409768448,
    0.06628201607768491, 0.0621093973107858, 0.05788212964971162, 0.05359902570581965, 0.049258852238916795,
    0.04486033810281742, 0.04040217894515852, 0.03588302777906316, 0.031301499056865634, 0.026656135918947887,
    0.021945431068096877, 0.017167860947009173, 0.012321845716802615, 0.00740575963117851, 0.002417925414372135,
    -0.0026433914584083062, -0.007779979911196833, -0.012993693027381292, -0.018286441516665475, -0.02366020964607829,
    -0.029117047342895885, -0.03465907721975392, -0.04028849520853739, -0.04600757739729033, -0.051818680459273736,
    -0.05772424101849816, -0.06372679581160634, -0.0698289716593734, -0.07603349647662028, -0.08234319265018919,
    -0.0887610024563752, -0.09528997022019547, -0.10193325498855543, -0.10869416951874733, -0.1155761322713027,
    -0.12258271055218328, -0.12971762179226287, -0.13698469691780035, -0.14438795047245145, -0.15193160782130066,
    -0.1596200813031472, -0.16745800935140975, -0.1754502283888879, -0.18360171872919295, -0.1919176675841454,
    -0.20040350396737638, -0.20906491660572613, -0.21790786327008682, -0.2269385411886624, -0.23616345903341562,
    -0.24558946698037376, -0.2552237416943428, -0.26507379034356493, -0.2751474915392187, -0.28545315723138254,
    -0.2959995086973679, -0.30679572086267903, -0.31785147456033425, -0.32917699524767974, -0.3407832619919584,
    -0.35268184730338437, -0.3648847730226441, -0.3774046991487219, -0.390254968107024, -0.40344976757489937,
    -0.41700418464726186, -0.43093412177957147, -0.44525649851970295, -0.45998928360760294, -0.47515158242463773,
    -0.490764059280707, -0.5068488806257894, -0.5234296264950569, -0.5405311157151504, -0.558179763442967,
    -0.5764039873470796, -0.5952341832217924, -0.614703057332703, -0.6348456788635368, -0.6557008622578322,
    -0.6773104783705599, -0.6997183729612986, -0.7229723142439464, -0.7471237890250477, -0.7722286918713013,
    -0.7983493755444369, -0.8255537473258912, -0.853914604398756, -0.8835104451026186, -0.914428063035932,
    -0.9467652355772054, -0.9806287704602856, -1.0161339358745458, -1.0534087436446535, -1.0925986210377805,
    -1.1338631211127796, -1.1773775438370953, -1.2233426299734433, -1.2719814174262143, -1.3235438328597762,
    -1.3783149135795338, -1.4366152269139434, -1.4988096887688749, -1.5653163245237787, -1.6366099507750578,
    -1.713240427235927, -1.7958444206274304, -1.8851528110721265, -1.9820141341386885, -2.087419777507183,
    -2.2025300336856937, -2.328699389542672, -2.467496565681489, -2.620748183250747, -2.7905455890427584,
    -2.9792267837192288, -3.1893085610005665, -3.4232386753042094, -3.682945165882792, -3.9688934103562783,
    -4.278305090873717, -4.602328196367359, -4.921971833369168, -5.204443168212364, -5.404619475869577,
    -5.47793983723031,
])

PKN_D = np.float64(0.58206357240022)
PKN_J = np.float64(0.7531287905116318)

PKN_ETA = np.array([
    0.0, 0.0024999999997500355, 0.00499999999949996, 0.0074999999992499955, 0.009999999999000031,
    0.012499999998750067, 0.014999999998499991, 0.017499999998250027, 0.019999999998000062, 0.022499999997749986,
    0.024999999997500022, 0.027499999997250058, 0.029999999996999982, 0.03249999999675002, 0.03499999999650005,
    0.03749999999624998, 0.03999999999600001, 0.04249999999575005, 0.04499999999549997, 0.04749999999525001,
    0.049999999995000044, 0.05249999999474997, 0.054999999994500004, 0.05749999999425004, 0.059999999993999964,
    0.06249999999375, 0.06499999999350003, 0.06749999999324996, 0.069999999993, 0.07249999999275003,
    0.07499999999250007, 0.07749999999224999, 0.07999999999200003, 0.08249999999175006, 0.08499999999149999,
    0.08749999999125002, 0.08999999999100006, 0.09249999999074998, 0.09499999999050002, 0.09749999999025005,
    0.09999999998999998, 0.10249999998975001, 0.10499999998950005, 0.10749999998924997, 0.10999999998900001,
    0.11249999998875004, 0.11499999998849997, 0.11749999998825, 0.11999999998800004, 0.12249999998774996,
    0.1249999999875, 0.12749999998725003, 0.12999999998699996, 0.13249999998675, 0.13499999998650003,
    0.13749999998625007, 0.139999999986, 0.14249999998575003, 0.14499999998550006, 0.14749999998524999,
    0.14999999998500002, 0.15249999998475006, 0.15499999998449998, 0.15749999998425002, 0.15999999998400005,
    0.16249999998374998, 0.1649999999835, 0.16749999998325005, 0.16999999998299997, 0.17249999998275,
    0.17499999998250004, 0.17749999998224997, 0.179999999982, 0.18249999998175004, 0.18499999998149996,
    0.18749999998125, 0.18999999998100003, 0.19249999998074996, 0.1949999999805, 0.19749999998025003,
    0.19999999997999995, 0.20249999997975, 0.20499999997950002, 0.20749999997925006, 0.20999999997899998,
    0.21249999997875002, 0.21499999997850006, 0.21749999997824998, 0.21999999997800002, 0.22249999997775005,
    0.22499999997749998, 0.22749999997725, 0.22999999997700005, 0.23249999997674997, 0.2349999999765,
    0.23749999997625004, 0.23999999997599997, 0.24249999997575, 0.24499999997550004, 0.24749999997524996,
    0.249999999975, 0.25249999997475003, 0.25499999997449996, 0.25749999997425, 0.25999999997400003,
    0.26249999997374995, 0.2649999999735, 0.26749999997325, 0.26999999997300006, 0.27249999997275,
    0.2749999999725, 0.27749999997225006, 0.279999999972, 0.28249999997175, 0.28499999997150005,
    0.28749999997125, 0.289999999971, 0.29249999997075005, 0.29499999997049997, 0.29749999997025,
    0.29999999997000004, 0.30249999996974997, 0.3049999999695, 0.30749999996925004, 0.30999999996899996,
    0.31249999996875, 0.31499999996850003, 0.31749999996824996, 0.319999999968, 0.32249999996775003,
    0.32499999996749995, 0.32749999996725, 0.329999999967, 0.33249999996675006, 0.3349999999665,
    0.33749999996625, 0.33999999996600005, 0.34249999996575, 0.3449999999655, 0.34749999996525005,
    0.349999999965, 0.35249999996475, 0.35499999996450005, 0.35749999996424997, 0.359999999964,
    0.36249999996375004, 0.36499999996349997, 0.36749999996325, 0.36999999996300004, 0.37249999996274996,
    0.3749999999625, 0.37749999996225003, 0.37999999996199996, 0.38249999996175, 0.38499999996150003,
    0.38749999996124995, 0.389999999961, 0.39249999996075, 0.39499999996050006, 0.39749999996025,
    0.39999999996, 0.40249999995975005, 0.4049999999595, 0.40749999995925, 0.40999999995900005,
    0.41249999995875, 0.4149999999585, 0.41749999995825005, 0.41999999995799997, 0.42249999995775,
    0.42499999995750004, 0.42749999995724997, 0.429999999957, 0.43249999995675004, 0.43499999995649996,
    0.43749999995625, 0.43999999995600003, 0.44249999995574996, 0.4449999999555, 0.44749999995525,
    0.44999999995499995, 0.45249999995475, 0.4549999999545, 0.45749999995425006, 0.459999999954,
    0.46249999995375, 0.46499999995350005, 0.46749999995325, 0.469999999953, 0.47249999995275005,
    0.4749999999525, 0.47749999995225, 0.47999999995200004, 0.48249999995174997, 0.4849999999515,
    0.48749999995125004, 0.48999999995099996, 0.49249999995075, 0.49499999995050004, 0.49749999995024996,
    0.49999999995, 0.5024999999497499, 0.5049999999495001, 0.50749999994925, 0.509999999949,
    0.5124999999487501, 0.5149999999485, 0.51749999994825, 0.5199999999480001, 0.52249999994775,
    0.5249999999475, 0.52749999994725, 0.529999999947, 0.53249999994675, 0.5349999999465,
    0.53749999994625, 0.539999999946, 0.54249999994575, 0.5449999999455, 0.54749999994525,
    0.549999999945, 0.55249999994475, 0.5549999999445, 0.55749999994425, 0.559999999944,
    0.56249999994375, 0.5649999999435, 0.56749999994325, 0.569999999943, 0.57249999994275,
    0.5749999999425, 0.57749999994225, 0.579999999942, 0.58249999994175, 0.5849999999415,
    0.58749999994125, 0.5899999999409999, 0.59249999994075, 0.5949999999405, 0.5974999999402499,
    0.59999999994, 0.60249999993975, 0.6049999999394999, 0.6074999999392501, 0.609999999939,
    0.6124999999387499, 0.6149999999385001, 0.61749999993825, 0.6199999999379999, 0.6224999999377501,
    0.6249999999375, 0.6274999999372499, 0.6299999999370001, 0.63249999993675, 0.6349999999365,
    0.6374999999362501, 0.639999999936, 0.64249999993575, 0.6449999999355001, 0.64749999993525,
    0.649999999935, 0.65249999993475, 0.6549999999345, 0.65749999993425, 0.659999999934,
    0.66249999993375, 0.6649999999335, 0.66749999993325, 0.669999999933, 0.67249999993275,
    0.6749999999325, 0.67749999993225, 0.679999999932, 0.68249999993175, 0.6849999999315,
    0.68749999993125, 0.689999999931, 0.69249999993075, 0.6949999999305, 0.69749999993025,
    0.69999999993, 0.70249999992975, 0.7049999999295, 0.70749999992925, 0.709999999929,
    0.71249999992875, 0.7149999999284999, 0.71749999992825, 0.719999999928, 0.7224999999277499,
    0.7249999999275, 0.72749999992725, 0.7299999999269999, 0.7324999999267501, 0.7349999999265,
    0.7374999999262499, 0.7399999999260001, 0.74249999992575, 0.7449999999254999, 0.7474999999252501,
    0.749999999925, 0.75249999992475, 0.7549999999245001, 0.75749999992425, 0.759999999924,
    0.7624999999237501, 0.7649999999235, 0.76749999992325, 0.7699999999230001, 0.77249999992275,
    0.7749999999225, 0.77749999992225, 0.779999999922, 0.78249999992175, 0.7849999999215,
    0.78749999992125, 0.789999999921, 0.79249999992075, 0.7949999999205, 0.79749999992025,
    0.79999999992, 0.80249999991975, 0.8049999999195, 0.80749999991925, 0.809999999919,
    0.81249999991875, 0.8149999999185, 0.81749999991825, 0.819999999918, 0.82249999991775,
    0.8249999999175, 0.82749999991725, 0.829999999917, 0.8324999999167499, 0.8349999999165,
    0.83749999991625, 0.8399999999159999, 0.84249999991575, 0.8449999999155, 0.8474999999152499,
    0.849999999915, 0.85249999991475, 0.8549999999144999, 0.85749999991425, 0.859999999914,
    0.8624999999137499, 0.8649999999135, 0.86749999991325, 0.869999999913, 0.87249999991275,
    0.8749999999125, 0.87749999991225, 0.8799999999120001, 0.88249999991175, 0.8849999999115,
    0.8874999999112501, 0.889999999911, 0.89249999991075, 0.8949999999105, 0.89749999991025,
    0.89999999991, 0.90249999990975, 0.9049999999095, 0.90749999990925, 0.909999999909,
    0.91249999990875, 0.9149999999085, 0.91749999990825, 0.919999999908, 0.92249999990775,
    0.9249999999075, 0.92749999990725, 0.929999999907, 0.93249999990675, 0.9349999999065,
    0.93749999990625, 0.939999999906, 0.94249999990575, 0.9449999999055, 0.94749999990525,
    0.949999999905, 0.95249999990475, 0.9549999999045, 0.9574999999042499, 0.959999999904,
    0.96249999990375, 0.9649999999035, 0.96749999990325, 0.969999999903, 0.97249999990275,
    0.9749999999025, 0.97749999990225, 0.979999999902, 0.98249999990175, 0.9849999999015,
    0.98749999990125, 0.989999999901, 0.99249999990075, 0.9949999999005, 0.99749999990025,
    0.9999999999,
])
PKN_V = np.array([
    1.0, 0.9991905010014688, 0.9983795705627952, 0.9975672027252581, 0.9967533914901123,
    0.9959381308185176, 0.9951214146306206, 0.9943032368066018, 0.9934835911847829, 0.9926624715610439,
    0.991839871688822, 0.9910157852791123, 0.9901902060004673, 0.9893631274788427, 0.9885345432950001,
    0.9877044469864577, 0.9868728320458627, 0.9860396919201163, 0.9852050200103734, 0.9843688096720417,
    0.9835310542147833, 0.9826917469021771, 0.9818508809489891, 0.9810084495235085, 0.9801644457453063,
    0.9793188626846239, 0.9784716933623742, 0.9776229307501403, 0.9767725677701766, 0.9759205972945068,
    0.9750670121426661, 0.9742118050839483, 0.9733549688346417, 0.9724964960578188, 0.9716363793633372,
    0.9707746113078379, 0.969911184394745, 0.9690460910719008, 0.9681793237318144, 0.9673108747115874,
    0.9664407362908874, 0.9655689006919489, 0.9646953600795726, 0.9638201065611258, 0.9629431321859885,
    0.9620644289424158, 0.9611839887601086, 0.9603018035072872, 0.9594178649901595, 0.95853216495292,
    0.9576446950777505, 0.9567554469848017, 0.9558644122292759, 0.9549715823021611, 0.9540769486294227,
    0.9531805025700384, 0.9522822354159985, 0.9513821383923063, 0.9504802026569779, 0.9495764192994572,
    0.9486707793384034, 0.9477632737235218, 0.9468538933322288, 0.9459426289695478, 0.9450294713681097,
    0.9441144111881519, 0.9431974390165728, 0.9422785453634643, 0.9413577206647255, 0.9404349552783803,
    0.9395102394841836, 0.9385835634836198, 0.9376549173999037, 0.9367242912772267, 0.935791675076796,
    0.9348570586795613, 0.9339204318824069, 0.932981784397555, 0.9320411058525649, 0.9310983857903341,
    0.9301536136681945, 0.9292067788537904, 0.9282578706278036, 0.9273068781798401, 0.9263537906078875,
    0.9253985969183142, 0.9244412860258705, 0.9234818467521545, 0.9225202678219092, 0.9215565378653324,
    0.9205906454136892, 0.9196225788990533, 0.9186523266543063, 0.9176798769131386, 0.9167052178069186,
    0.9157283373631678, 0.9147492235056554, 0.9137678640507171, 0.9127842467072477, 0.9117983590767018,
    0.9108101886527724, 0.9098197228161632, 0.9088269488367388, 0.9078318538695358, 0.9068344249531618,
    0.9058346490097949, 0.9048325128451837, 0.903828003146403, 0.9028211064778322, 0.9018118092828594,
    0.9008000978788141, 0.8997859584567969, 0.8987693770816788, 0.897750339691657, 0.8967288320922827,
    0.8957048399586685, 0.8946783488306118, 0.8936493441109921, 0.8926178110657697, 0.8915837348239845,
    0.8905471003731699, 0.8895078925579756, 0.8884660960784974, 0.8874216954862472, 0.8863746751841536,
    0.8853250194265608, 0.884272712316388, 0.8832177378002372, 0.8821600796695158, 0.8810997215544725,
    0.880036646924036, 0.8789708390858157, 0.8779022811839694, 0.8768309561927858, 0.8757568469185513,
    0.8746799359927545, 0.8736002058716524, 0.8725176388362704, 0.8714322169902631, 0.8703439222528673,
    0.8692527363606765, 0.8681586408603588, 0.8670616171081464, 0.865961646269835, 0.8648587093178634,
    0.8637527870244102, 0.8626438599623596, 0.8615319084978376, 0.8604169127899084, 0.8592988527905749,
    0.8581777082397625, 0.8570534586603797, 0.8559260833566057, 0.8547955614073935, 0.8536618716664482,
    0.8525249927619797, 0.8513849030881099, 0.8502415808044194, 0.8490950038288892, 0.8479451498343458,
    0.8467919962484586, 0.845635520251623, 0.844475698766963, 0.8433125084612453, 0.8421459257352281,
    0.8409759267227136, 0.8398024872905189, 0.8386255830303552, 0.8374451892550498, 0.8362612809923899,
    0.835073832979322, 0.8338828196619501, 0.8326882151927169, 0.8314899934190185, 0.8302881278829736,
    0.8290825918104926, 0.8278733581104599, 0.8266603993740793, 0.825443687862891, 0.824223195507268,
    0.8229988938952492, 0.8217707542691274, 0.8205387475254148, 0.819302844205029, 0.8180630144872507,
    0.8168192281810793, 0.8155714547182503, 0.8143196631532368, 0.8130638221556928, 0.8118038999997337,
    0.8105398645578583, 0.8092716832907404, 0.8079993232471843, 0.8067227510571284, 0.8054419329185768,
    0.8041568345916217, 0.8028674213866044, 0.8015736581639787, 0.800275509326136, 0.7989729388037079,
    0.7976659100477225, 0.7963543860176076, 0.7950383291811056, 0.7937177015024974, 0.7923924644308432,
    0.7910625788874848, 0.7897280052561256, 0.7883887033822563, 0.7870446325559689, 0.7856957515032856,
    0.7843420183680184, 0.7829833907057654, 0.7816198254806744, 0.7802512790436261, 0.7788777071239827,
    0.7774990648093486, 0.7761153065434272, 0.7747263861145856, 0.7733322566358074, 0.7719328705297633,
    0.7705281795139174, 0.7691181345984964, 0.7677026860622433, 0.7662817834398173, 0.764855375497245,
    0.7634234102276742, 0.7619858348371882, 0.7605425957208486, 0.7590936384422626, 0.7576389077175785,
    0.7561783474101968, 0.7547119005000047, 0.7532395090658606, 0.7517611142588356, 0.7502766562986318,
    0.7487860744446604, 0.7472893069744746, 0.7457862911515926, 0.7442769632185435, 0.7427612583720375,
    0.7412391107346754, 0.7397104533206446, 0.7381752180229709, 0.7366333355919016, 0.7350847355994108,
    0.7335293464036114, 0.7319670951304044, 0.7303979076520603, 0.7288217085460216, 0.7272384210560685,
    0.7256479670708742, 0.724050267098435, 0.7224452402213912, 0.7208328040518557, 0.7192128747103522,
    0.7175853667913731, 0.715950193316055, 0.7143072656796629, 0.7126564936330053, 0.7109977852347111,
    0.7093310467996913, 0.7076561828432019, 0.7059730960619403, 0.7042816872701528, 0.7025818553413017,
    0.7008734971577318, 0.6991565075778091, 0.6974307793621554, 0.695696203103591, 0.6939526671911072,
    0.6922000577454887, 0.690438258541749, 0.6886671509364357, 0.6868866138303064, 0.6850965235747709,
    0.6832967538840963, 0.6814871757845268, 0.6796676575323594, 0.6778380645125387, 0.6759982591542639,
    0.6741481008687633, 0.672287445933613, 0.6704161473796787, 0.6685340549329487, 0.6666410148877674,
    0.6647368699782055, 0.6628214592982018, 0.6608946181794062, 0.6589561780408826, 0.6570059662828494,
    0.6550438061674114, 0.6530695166462839, 0.6510829122272939, 0.6490838028506201, 0.6470719936936031,
    0.6450472850117037, 0.6430094720015375, 0.6409583445794333, 0.638893687199801, 0.6368152786955945,
    0.6347228920252104, 0.6326162940725311, 0.6304952454527619, 0.6283595002220972, 0.6262088056648957,
    0.6240429020467558, 0.6218615222867689, 0.6196643917320275, 0.6174512278359741, 0.615221739804809,
    0.6129756283365154, 0.6107125852187737, 0.6084322929596494, 0.6061344244548867, 0.6038186424996395,
    0.6014845994269832, 0.5991319366299062, 0.5967602840446101, 0.5943692597265937, 0.5919584692247674,
    0.5895275050791402, 0.587075946205276, 0.5846033572172087, 0.5821092878432402, 0.5795932721030402,
    0.577054827646535, 0.574493454885851, 0.5719086361550779, 0.5692998348277736, 0.5666664942726383,
    0.5640080369274343, 0.5613238630640038, 0.5586133497430531, 0.5558758494275159, 0.5531106887410102,
    0.5503171669355605, 0.5474945544086641, 0.5446420909902295, 0.5417589841928756, 0.5388444072600482,
    0.5358974971216243, 0.5329173521357994, 0.5299030297096848, 0.5268535436549696, 0.5237678614239579,
    0.5206449009762585, 0.5174835275683474, 0.514282550012788, 0.5110407169134885, 0.5077567122210201,
    0.5044291507049501, 0.5010565727464186, 0.49763743875538147, 0.4941701230850093, 0.49065290713714454,
    0.48708397204749676, 0.4834613903513551, 0.4797831168676266, 0.4760469786795792, 0.4722506637679279,
    0.46839170851045747, 0.46446748373857305, 0.46047517893200446, 0.4564117845904552, 0.4522740723699792,
    0.448058572575881, 0.44376154856487027, 0.43937896771423274, 0.4349064681786383, 0.4303393207780545,
    0.425672385029828, 0.42090005828761895, 0.4160162166090622, 0.41101414564550603, 0.4058864593972438,
    0.40062500420900193, 0.3952207445803259, 0.38966362643832403, 0.38394241222286085, 0.37804448042790784,
    0.37195557981431737, 0.365659525163661, 0.3591378169444277, 0.3523691603580074, 0.3453288492160366,
    0.3379879662369744, 0.3303123279131672, 0.32226106839429736, 0.313784699529682, 0.3048223922265139,
    0.2952980628127929, 0.28511455949960485, 0.27414469762681853, 0.2622167914518516, 0.249089947797704,
    0.23440871486292486, 0.21761143802199223, 0.197718259081014, 0.1727273054510013, 0.13709732352342827,
    0.00046887845425624226,
])
